#include "cbgame/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace cbgame {

namespace {

// Ties break toward the lowest index.
int arg_max(const std::vector<double>& values) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i) {
        if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    return best;
}

int arg_min(const std::vector<double>& values) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i) {
        if (values[static_cast<std::size_t>(i)] < values[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    return best;
}

// Largest value over all vertices except `skip`.
double nearest_max(const std::vector<double>& values, int skip) {
    bool seen = false;
    double best = 0.0;
    for (int i = 0; i < static_cast<int>(values.size()); ++i) {
        if (i == skip) {
            continue;
        }
        const double v = values[static_cast<std::size_t>(i)];
        if (!seen || v > best) {
            best = v;
            seen = true;
        }
    }
    return best;
}

double evaluate(std::vector<double>& x, const Objective& f, const Projector& projector,
                long& eval_count) {
    if (projector) {
        projector(x);
    }
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw std::runtime_error("simplex: objective returned a non-finite value");
    }
    ++eval_count;
    return v;
}

std::vector<double> centroid_excluding(const SimplexState& state, int skip) {
    const std::size_t dim = state.vertices.front().size();
    std::vector<double> center(dim, 0.0);
    int used = 0;
    for (int i = 0; i < static_cast<int>(state.vertices.size()); ++i) {
        if (i == skip) {
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            center[j] += state.vertices[static_cast<std::size_t>(i)][j];
        }
        ++used;
    }
    for (double& c : center) {
        c /= used;
    }
    return center;
}

}  // namespace

void SimplexConfig::validate() const {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("SimplexConfig: alpha must be > 0");
    }
    if (!(gamma > 1.0)) {
        throw std::invalid_argument("SimplexConfig: gamma must be > 1");
    }
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument("SimplexConfig: beta must lie in (0,1)");
    }
    if (size_k == 0.0 || !std::isfinite(size_k)) {
        throw std::invalid_argument("SimplexConfig: size_k must be nonzero and finite");
    }
    if (max_iter < 0) {
        throw std::invalid_argument("SimplexConfig: max_iter must be >= 0");
    }
    if (!(eps_inner >= 0.0)) {
        throw std::invalid_argument("SimplexConfig: eps_inner must be >= 0");
    }
}

SimplexState init_simplex(const std::vector<double>& x1, double k, const Objective& f,
                          const Projector& projector) {
    if (x1.empty()) {
        throw std::invalid_argument("init_simplex: dimension must be >= 1");
    }
    if (k == 0.0) {
        throw std::invalid_argument("init_simplex: k must be nonzero");
    }
    SimplexState state;
    const std::size_t dim = x1.size();
    state.vertices.reserve(dim + 1);
    state.values.reserve(dim + 1);

    std::vector<double> base = x1;
    state.values.push_back(evaluate(base, f, projector, state.eval_count));
    state.vertices.push_back(base);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<double> v = state.vertices.front();
        v[j] += k;
        state.values.push_back(evaluate(v, f, projector, state.eval_count));
        state.vertices.push_back(std::move(v));
    }
    return state;
}

std::vector<double> centroid(const SimplexState& state) {
    if (state.vertices.empty()) {
        throw std::invalid_argument("centroid: empty simplex");
    }
    return centroid_excluding(state, -1);
}

std::vector<double> reflect(const std::vector<double>& x_max, const std::vector<double>& x_center,
                            double alpha) {
    std::vector<double> out(x_max.size());
    for (std::size_t j = 0; j < x_max.size(); ++j) {
        out[j] = (1.0 + alpha) * x_center[j] - alpha * x_max[j];
    }
    return out;
}

std::vector<double> expand(const std::vector<double>& x_star, const std::vector<double>& x_center,
                           double gamma) {
    std::vector<double> out(x_star.size());
    for (std::size_t j = 0; j < x_star.size(); ++j) {
        out[j] = gamma * x_star[j] + (1.0 - gamma) * x_center[j];
    }
    return out;
}

std::vector<double> contract(const std::vector<double>& x_max, const std::vector<double>& x_center,
                             double beta) {
    std::vector<double> out(x_max.size());
    for (std::size_t j = 0; j < x_max.size(); ++j) {
        out[j] = beta * x_max[j] + (1.0 - beta) * x_center[j];
    }
    return out;
}

void multi_contract(SimplexState& state, const Objective& f, const Projector& projector) {
    const int imin = arg_min(state.values);
    const std::vector<double>& x_min = state.vertices[static_cast<std::size_t>(imin)];
    for (int i = 0; i < static_cast<int>(state.vertices.size()); ++i) {
        if (i == imin) {
            continue;  // fixed point
        }
        std::vector<double>& v = state.vertices[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = (v[j] + x_min[j]) / 2.0;
        }
        state.values[static_cast<std::size_t>(i)] = evaluate(v, f, projector, state.eval_count);
    }
}

void simplex_step(SimplexState& state, const Objective& f, const SimplexConfig& cfg,
                  const Projector& projector) {
    if (state.vertices.size() < 2 || state.values.size() != state.vertices.size()) {
        throw std::invalid_argument("simplex_step: incoherent state");
    }
    const int imax = arg_max(state.values);
    const int imin = arg_min(state.values);
    const double f_max = state.values[static_cast<std::size_t>(imax)];
    const double f_min = state.values[static_cast<std::size_t>(imin)];
    const double f_near = nearest_max(state.values, imax);

    const std::vector<double> center =
        cfg.exclude_worst_in_centroid ? centroid_excluding(state, imax) : centroid(state);

    std::vector<double> candidate =
        reflect(state.vertices[static_cast<std::size_t>(imax)], center, cfg.alpha);
    double f_candidate = evaluate(candidate, f, projector, state.eval_count);

    if (f_candidate < f_min) {
        std::vector<double> expanded = expand(candidate, center, cfg.gamma);
        const double f_expanded = evaluate(expanded, f, projector, state.eval_count);
        if (f_expanded < f_candidate) {
            candidate = std::move(expanded);
            f_candidate = f_expanded;
        }
    } else if (f_candidate > f_near) {
        candidate = contract(state.vertices[static_cast<std::size_t>(imax)], center, cfg.beta);
        f_candidate = evaluate(candidate, f, projector, state.eval_count);
    }

    if (f_candidate > f_max) {
        multi_contract(state, f, projector);
    } else {
        state.vertices[static_cast<std::size_t>(imax)] = std::move(candidate);
        state.values[static_cast<std::size_t>(imax)] = f_candidate;
    }
}

SimplexResult simplex_run(const Objective& f, const std::vector<double>& x1,
                          const SimplexConfig& cfg, const Projector& projector) {
    cfg.validate();
    SimplexState state = init_simplex(x1, cfg.size_k, f, projector);

    SimplexResult result;
    for (int i = 1; i <= cfg.max_iter; ++i) {
        const double f_max = state.values[static_cast<std::size_t>(arg_max(state.values))];
        const double f_min = state.values[static_cast<std::size_t>(arg_min(state.values))];
        result.history.push_back({i, f_min, f_max, f_max - f_min});
        if (i == cfg.max_iter || (f_max - f_min) < cfg.eps_inner) {
            break;
        }
        simplex_step(state, f, cfg, projector);
        ++result.steps;
    }

    const int imin = arg_min(state.values);
    result.x_best = state.vertices[static_cast<std::size_t>(imin)];
    result.f_best = state.values[static_cast<std::size_t>(imin)];
    result.eval_count = state.eval_count;
    return result;
}

}  // namespace cbgame
