#include "cbgame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cbgame {

ThresholdGrid build_grid(int node_count, int horizon_day, Role role) {
    if (node_count < 3) {
        throw std::invalid_argument("build_grid: need at least 3 nodes");
    }
    if (horizon_day < node_count) {
        throw std::invalid_argument("build_grid: horizon too short for the node count");
    }

    ThresholdGrid grid;
    grid.role = role;
    grid.horizon_day = horizon_day;
    grid.node_days.assign(static_cast<std::size_t>(node_count), 0);
    grid.node_days.back() = horizon_day;

    // Exact node i (1-based) sits at horizon * (1 - 2^(1-i)): each interior
    // node is the midpoint of its predecessor and the horizon. Round half-up,
    // bump forward on collision, then clamp from the right so the packed tail
    // stays strictly below the horizon.
    for (int i = 1; i < node_count - 1; ++i) {
        const double exact = horizon_day * (1.0 - std::ldexp(1.0, -i));
        const int rounded = static_cast<int>(std::floor(exact + 0.5));
        grid.node_days[static_cast<std::size_t>(i)] =
            std::max(rounded, grid.node_days[static_cast<std::size_t>(i - 1)] + 1);
    }
    for (int i = node_count - 2; i >= 1; --i) {
        grid.node_days[static_cast<std::size_t>(i)] =
            std::min(grid.node_days[static_cast<std::size_t>(i)],
                     grid.node_days[static_cast<std::size_t>(i + 1)] - 1);
    }
    return grid;
}

double daily_value(const Strategy& strategy, int day) {
    const auto& days = strategy.grid.node_days;
    const auto& values = strategy.node_values;
    if (days.size() != values.size() || days.empty()) {
        throw std::invalid_argument("daily_value: node days and values disagree");
    }
    if (day < 0) {
        throw std::invalid_argument("daily_value: day must be >= 0");
    }
    if (day >= strategy.grid.horizon_day) {
        if (day == strategy.grid.horizon_day || strategy.grid.role == Role::Issuer) {
            return values.back();  // issuer: constant past its horizon
        }
        throw std::invalid_argument("daily_value: day beyond the investor horizon");
    }
    const auto it = std::upper_bound(days.begin(), days.end(), day);
    const std::size_t hi = static_cast<std::size_t>(it - days.begin());
    const std::size_t lo = hi - 1;
    if (days[lo] == day) {
        return values[lo];
    }
    const double span = static_cast<double>(days[hi] - days[lo]);
    return values[lo] + (values[hi] - values[lo]) * (day - days[lo]) / span;
}

std::vector<double> daily_values(const Strategy& strategy, int through_day) {
    std::vector<double> out(static_cast<std::size_t>(through_day) + 1);
    for (int d = 0; d <= through_day; ++d) {
        out[static_cast<std::size_t>(d)] = daily_value(strategy, d);
    }
    return out;
}

std::vector<double> project_feasible(std::vector<double> values, Role role, const BondTerms& terms) {
    if (role == Role::Investor) {
        for (double& v : values) {
            v = std::max(v, terms.face_value);
        }
        if (!values.empty()) {
            values.back() = terms.face_value;
        }
    } else {
        for (double& v : values) {
            v = std::clamp(v, terms.face_value, terms.call_price);
        }
    }
    return values;
}

Strategy initial_guess(const ThresholdGrid& grid, const BondTerms& terms, double epsilon) {
    if (epsilon < 0.0) {
        throw std::invalid_argument("initial_guess: epsilon must be >= 0");
    }
    const double level = grid.role == Role::Investor ? terms.call_price + epsilon
                                                     : terms.face_value + epsilon;
    std::vector<double> values(static_cast<std::size_t>(grid.size()), level);
    return Strategy{grid, project_feasible(std::move(values), grid.role, terms)};
}

}  // namespace cbgame
