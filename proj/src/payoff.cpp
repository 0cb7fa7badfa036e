#include "cbgame/payoff.hpp"

#include <stdexcept>

namespace cbgame {

namespace {

// Exercise state machine over precomputed daily thresholds.
PayoffOutcome run_game(std::span<const double> path, std::span<const double> conv_daily,
                       std::span<const double> call_daily, const BondTerms& terms,
                       int horizon_day) {
    bool notice_running = false;
    int notice_counter = 0;
    for (int t = 0; t <= horizon_day; ++t) {
        const double s = path[static_cast<std::size_t>(t)];
        if (s > conv_daily[static_cast<std::size_t>(t)]) {
            return {s, t, ExitKind::Conversion};
        }
        if (notice_running) {
            if (notice_counter == terms.notice_days) {
                return {terms.call_price, t, ExitKind::Call};
            }
            ++notice_counter;
        } else if (s > call_daily[static_cast<std::size_t>(t)] &&
                   (horizon_day - t) > terms.notice_days) {
            notice_running = true;
        }
    }
    return {terms.face_value, horizon_day, ExitKind::Redemption};
}

}  // namespace

PayoffOutcome path_payoff(std::span<const double> path, const Strategy& conv,
                          const Strategy& call, const BondTerms& terms, int horizon_day) {
    if (static_cast<int>(path.size()) != horizon_day + 1) {
        throw std::invalid_argument("path_payoff: path length must be horizon + 1");
    }
    const std::vector<double> conv_daily = daily_values(conv, horizon_day);
    const std::vector<double> call_daily = daily_values(call, horizon_day);
    return run_game(path, conv_daily, call_daily, terms, horizon_day);
}

double mc_payoff(const PathSet& paths, const Strategy& conv, const Strategy& call,
                 const BondTerms& terms) {
    if (paths.path_count() < 1) {
        throw std::invalid_argument("mc_payoff: empty path set");
    }
    const int horizon = paths.horizon_days();
    const std::vector<double> conv_daily = daily_values(conv, horizon);
    const std::vector<double> call_daily = daily_values(call, horizon);
    double sum = 0.0;
    for (int i = 0; i < paths.path_count(); ++i) {
        sum += run_game(paths.row(i), conv_daily, call_daily, terms, horizon).amount;
    }
    return sum / paths.path_count();
}

std::vector<PayoffOutcome> payoff_diagnostics(const PathSet& paths, const Strategy& conv,
                                              const Strategy& call, const BondTerms& terms) {
    const int horizon = paths.horizon_days();
    const std::vector<double> conv_daily = daily_values(conv, horizon);
    const std::vector<double> call_daily = daily_values(call, horizon);
    std::vector<PayoffOutcome> out;
    out.reserve(static_cast<std::size_t>(paths.path_count()));
    for (int i = 0; i < paths.path_count(); ++i) {
        out.push_back(run_game(paths.row(i), conv_daily, call_daily, terms, horizon));
    }
    return out;
}

}  // namespace cbgame
