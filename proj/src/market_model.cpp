#include "cbgame/market_model.hpp"

#include <cmath>
#include <stdexcept>

#include "cbgame/rng.hpp"

namespace cbgame {

void MarketParams::validate() const {
    if (!(s0 > 0.0) || !std::isfinite(s0)) {
        throw std::invalid_argument("MarketParams: s0 must be positive and finite");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("MarketParams: sigma must be >= 0");
    }
    if (!std::isfinite(rate) || !std::isfinite(dividend_yield)) {
        throw std::invalid_argument("MarketParams: rate and dividend yield must be finite");
    }
    if (trading_days_per_year <= 0) {
        throw std::invalid_argument("MarketParams: trading_days_per_year must be positive");
    }
    if (maturity_years <= 0) {
        throw std::invalid_argument("MarketParams: maturity_years must be positive");
    }
}

double step_price(double s_t, const MarketParams& params, double z) {
    if (!std::isfinite(s_t) || !(s_t > 0.0)) {
        throw std::invalid_argument("step_price: s_t must be positive and finite");
    }
    if (!std::isfinite(z)) {
        throw std::invalid_argument("step_price: z must be finite");
    }
    const double dt = params.dt();
    const double drift = (params.rate - params.dividend_yield - 0.5 * params.sigma * params.sigma) * dt;
    return s_t * std::exp(drift + params.sigma * std::sqrt(dt) * z);
}

std::vector<double> generate_path_row(const MarketParams& params, std::uint64_t seed, int row) {
    const int horizon = params.horizon_days();
    std::vector<double> prices(static_cast<std::size_t>(horizon) + 1);
    prices[0] = params.s0;
    double s = params.s0;
    for (int t = 1; t <= horizon; ++t) {
        const double z = normal_draw(seed, static_cast<std::uint64_t>(row),
                                     static_cast<std::uint64_t>(t));
        s = step_price(s, params, z);
        prices[static_cast<std::size_t>(t)] = s;
    }
    return prices;
}

PathSet::PathSet(const MarketParams& params, int path_count, std::uint64_t seed)
    : params_(params), path_count_(path_count), seed_(seed) {
    params.validate();
    if (path_count < 1) {
        throw std::invalid_argument("PathSet: path count must be >= 1");
    }
    const std::size_t cols = static_cast<std::size_t>(horizon_days()) + 1;
    prices_.resize(static_cast<std::size_t>(path_count) * cols);
    for (int i = 0; i < path_count; ++i) {
        const std::vector<double> row = generate_path_row(params, seed, i);
        std::copy(row.begin(), row.end(), prices_.begin() + row_offset(i));
    }
}

PathSet generate_paths(const MarketParams& params, int path_count, std::uint64_t seed) {
    return PathSet(params, path_count, seed);
}

}  // namespace cbgame
