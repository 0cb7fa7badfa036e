#pragma once

#include <vector>

#include "cbgame/bond_terms.hpp"

namespace cbgame {

enum class Role { Investor, Issuer };

/// Geometric time grid of threshold node days: node 0 at day 0, last node at
/// horizon_day, each interior node halfway between its predecessor and the
/// horizon, rounded to whole days.
struct ThresholdGrid {
    std::vector<int> node_days;
    Role role = Role::Investor;
    int horizon_day = 0;

    int size() const { return static_cast<int>(node_days.size()); }
};

/// Build the node-day grid. horizon_day is T for the investor and
/// T - notice_days - 1 for the issuer. Requires node_count >= 3 and
/// horizon_day >= node_count.
ThresholdGrid build_grid(int node_count, int horizon_day, Role role);

/// A player's threshold trajectory: node values on the grid, interpolated
/// piecewise-linearly between node days.
struct Strategy {
    ThresholdGrid grid;
    std::vector<double> node_values;
};

/// Threshold on a given day. Between nodes: linear interpolation. Issuer days
/// beyond horizon_day return the last node value (those days are never
/// consulted by the payoff, which requires T - t > notice before calling).
double daily_value(const Strategy& strategy, int day);

/// Interpolated values for days 0..through_day inclusive.
std::vector<double> daily_values(const Strategy& strategy, int through_day);

/// Project node values onto the feasibility box. Investor: clamp up to the
/// face value and pin the terminal node to it. Issuer: clamp into
/// [face value, call price]. Idempotent.
std::vector<double> project_feasible(std::vector<double> values, Role role, const BondTerms& terms);

/// Starting trajectory: investor nodes at K + epsilon (terminal pinned to N),
/// issuer nodes at N + epsilon clamped into the box.
Strategy initial_guess(const ThresholdGrid& grid, const BondTerms& terms, double epsilon);

}  // namespace cbgame
