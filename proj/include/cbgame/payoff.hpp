#pragma once

#include <span>
#include <vector>

#include "cbgame/bond_terms.hpp"
#include "cbgame/market_model.hpp"
#include "cbgame/strategy.hpp"

namespace cbgame {

enum class ExitKind { Conversion, Call, Redemption };

/// How one path left the game: the amount paid, the day it happened, and
/// which exercise ended it.
struct PayoffOutcome {
    double amount = 0.0;
    int exit_day = 0;
    ExitKind exit_kind = ExitKind::Redemption;
};

/// Exercise game along one path. Each day, in order: the investor converts
/// when S_t exceeds the conversion threshold (also during the notice window:
/// forced conversion); an expiring notice pays the call price; otherwise a
/// crossing of the call threshold with more than notice_days to maturity
/// starts the notice counter. Maturity with no exit pays the face value.
/// The notice flag is never cleared once set; the call pays on the day the
/// counter equals notice_days, i.e. trigger day + notice_days + 1.
PayoffOutcome path_payoff(std::span<const double> path, const Strategy& conv,
                          const Strategy& call, const BondTerms& terms, int horizon_day);

/// Mean of path_payoff amounts over the whole set, accumulated in row order.
double mc_payoff(const PathSet& paths, const Strategy& conv, const Strategy& call,
                 const BondTerms& terms);

/// Per-path outcomes, row order.
std::vector<PayoffOutcome> payoff_diagnostics(const PathSet& paths, const Strategy& conv,
                                              const Strategy& call, const BondTerms& terms);

}  // namespace cbgame
