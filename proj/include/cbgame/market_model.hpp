#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cbgame {

/// Economic constants driving stock-path generation. The time step is one
/// trading day (1/250 year); the simulation horizon in days is
/// maturity_years * trading_days_per_year.
struct MarketParams {
    double s0 = 98.0;              ///< initial stock price
    double rate = 0.05;            ///< interest rate per year
    double dividend_yield = 0.1;   ///< dividend yield per year
    double sigma = 0.2;            ///< volatility per sqrt-year
    int trading_days_per_year = 250;
    int maturity_years = 2;

    double dt() const { return 1.0 / trading_days_per_year; }
    int horizon_days() const { return maturity_years * trading_days_per_year; }

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// One lognormal step: s * exp((r - delta - sigma^2/2)*dt + sigma*sqrt(dt)*z).
double step_price(double s_t, const MarketParams& params, double z);

/// A frozen set of simulated daily stock-price paths plus the seed that
/// produced it. Immutable after construction; safe to share across threads.
class PathSet {
public:
    PathSet(const MarketParams& params, int path_count, std::uint64_t seed);

    int path_count() const { return path_count_; }
    int horizon_days() const { return params_.horizon_days(); }
    std::uint64_t seed() const { return seed_; }
    const MarketParams& params() const { return params_; }

    double price(int path, int day) const { return prices_[row_offset(path) + day]; }
    std::span<const double> row(int path) const {
        return {prices_.data() + row_offset(path), static_cast<std::size_t>(horizon_days() + 1)};
    }

private:
    std::size_t row_offset(int path) const {
        return static_cast<std::size_t>(path) * (horizon_days() + 1);
    }

    MarketParams params_;
    int path_count_;
    std::uint64_t seed_;
    std::vector<double> prices_;
};

/// Generate one path row. Draws are keyed by (seed, row, step), so row i is
/// the same regardless of how many rows are generated.
std::vector<double> generate_path_row(const MarketParams& params, std::uint64_t seed, int row);

PathSet generate_paths(const MarketParams& params, int path_count, std::uint64_t seed);

}  // namespace cbgame
