#pragma once

#include <cstdint>
#include <vector>

#include "cbgame/bond_terms.hpp"
#include "cbgame/market_model.hpp"
#include "cbgame/simplex.hpp"
#include "cbgame/strategy.hpp"

namespace cbgame {

enum class InnerMode {
    FullRun,          ///< each phase runs the inner simplex to its own termination
    SingleIteration,  ///< each phase performs inner_steps simplex moves
};

struct GameConfig {
    MarketParams market;
    BondTerms terms;
    int nodes = 10;   ///< threshold points per strategy (m)
    int paths = 525;  ///< simulated trajectories (M)
    std::uint64_t seed = 1;
    double epsilon_guess = 5.0;  ///< initial-guess offset above the boundary
    SimplexConfig simplex;
    double eps_gap = 1e-4;
    int max_outer = 100;
    InnerMode inner_mode = InnerMode::FullRun;
    int inner_steps = 1;  ///< simplex moves per phase in SingleIteration mode

    int investor_dimension() const { return nodes - 1; }  ///< terminal node pinned
    int issuer_dimension() const { return nodes; }

    void validate() const;
};

/// One outer iteration: the payoff after the investor's maximization, after
/// the issuer's minimization, their gap, and both node-value vectors.
struct TraceRow {
    int outer_iter = 0;
    double payoff_after_max = 0.0;
    double payoff_after_min = 0.0;
    double gap = 0.0;
    std::vector<double> conv_nodes;
    std::vector<double> call_nodes;
};

/// Iteration log of one inner simplex run (investor phase logs the negated
/// objective the minimizer actually saw).
struct InnerRunLog {
    int outer_iter = 0;
    Role role = Role::Investor;
    std::vector<IterationRecord> history;
};

struct MinMaxResult {
    Strategy conv_star;
    Strategy call_star;
    std::vector<TraceRow> trace;
    std::vector<InnerRunLog> inner_logs;
    bool converged = false;     ///< the gap rule fired before max_outer
    bool gap_anomaly = false;   ///< a negative gap was recorded
    double final_payoff = 0.0;  ///< payoff(conv*, call*) of the last iteration
    double final_gap = 0.0;
    long objective_evals = 0;
};

/// Difference between the post-maximization and post-minimization payoffs.
double gap(double payoff_max, double payoff_min);

/// Alternating max-min driver: freeze one path set, then alternate investor
/// maximization and issuer minimization until the gap (or the previous gap)
/// falls to eps_gap, or max_outer is reached.
MinMaxResult solve(const GameConfig& config);

/// The interleaved objective sequence (after-max, after-min, ...) used by the
/// oscillation checks and the history plots.
std::vector<double> interleaved_payoffs(const std::vector<TraceRow>& trace);

}  // namespace cbgame
