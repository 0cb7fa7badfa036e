#pragma once

#include <functional>
#include <vector>

namespace cbgame {

using Objective = std::function<double(const std::vector<double>&)>;
/// In-place feasibility projection applied to every vertex before evaluation.
using Projector = std::function<void(std::vector<double>&)>;

struct SimplexConfig {
    double size_k = 3.0;    ///< initial vertex offset
    double alpha = 1.0;     ///< reflection coefficient, > 0
    double gamma = 2.0;     ///< expansion coefficient, > 1
    double beta = 0.5;      ///< contraction coefficient, in (0,1)
    int max_iter = 500;
    double eps_inner = 1e-6;  ///< terminate when f_max - f_min drops below
    /// The adapted method centers on all dim+1 vertices; this switches to the
    /// standard variant that drops the worst vertex from the centroid.
    bool exclude_worst_in_centroid = false;

    void validate() const;
};

/// dim+1 vertices with cached objective values.
struct SimplexState {
    std::vector<std::vector<double>> vertices;
    std::vector<double> values;
    long eval_count = 0;

    int dim() const { return static_cast<int>(vertices.empty() ? 0 : vertices.front().size()); }
};

/// Vertex 1 is x1; vertex i offsets coordinate i-1 of x1 by +k.
SimplexState init_simplex(const std::vector<double>& x1, double k, const Objective& f,
                          const Projector& projector = {});

/// Mean of all vertices (the worst one included).
std::vector<double> centroid(const SimplexState& state);

std::vector<double> reflect(const std::vector<double>& x_max, const std::vector<double>& x_center,
                            double alpha);
std::vector<double> expand(const std::vector<double>& x_star, const std::vector<double>& x_center,
                           double gamma);
std::vector<double> contract(const std::vector<double>& x_max, const std::vector<double>& x_center,
                             double beta);

/// Pull every vertex halfway toward the best one and re-evaluate.
void multi_contract(SimplexState& state, const Objective& f, const Projector& projector = {});

/// One iteration: reflect the worst vertex; expand when the reflection beats
/// the best value; contract when it is worse than the second-worst; if the
/// candidate still exceeds the worst value, multi-contract, otherwise the
/// candidate replaces the worst vertex.
void simplex_step(SimplexState& state, const Objective& f, const SimplexConfig& cfg,
                  const Projector& projector = {});

struct IterationRecord {
    int iter = 0;
    double f_min = 0.0;
    double f_max = 0.0;
    double spread = 0.0;
};

struct SimplexResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    std::vector<IterationRecord> history;  ///< one record per loop entry
    int steps = 0;                         ///< iterations that moved the simplex
    long eval_count = 0;
};

/// Minimize f from x1. Loop entry i checks i == max_iter or spread < eps_inner
/// before stepping, so max_iter bounds loop entries, not moves.
SimplexResult simplex_run(const Objective& f, const std::vector<double>& x1,
                          const SimplexConfig& cfg, const Projector& projector = {});

}  // namespace cbgame
