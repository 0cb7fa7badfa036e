#include "cbgame/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cbgame {

double uniform_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t step) noexcept {
    std::uint64_t h = mix64(mix64(mix64(seed) ^ path) ^ step);
    // Top 53 bits, centered on half-steps: strictly inside (0,1).
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

namespace {

// Acklam's rational approximation to the inverse normal CDF (~1.15e-9
// relative error), then one Newton step through std::erfc.
double acklam(double u) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double u_low = 0.02425;

    if (u < u_low) {
        const double q = std::sqrt(-2.0 * std::log(u));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (u <= 1.0 - u_low) {
        const double q = u - 0.5;
        const double t = q * q;
        return (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * q /
               (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - u));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double inverse_normal_cdf(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::invalid_argument("inverse_normal_cdf: u must lie in (0,1)");
    }
    double x = acklam(u);
    // Newton refinement: Phi(x) = erfc(-x/sqrt(2))/2, phi(x) = exp(-x^2/2)/sqrt(2*pi).
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    constexpr double sqrt_2pi = 2.5066282746310005024;
    const double err = 0.5 * std::erfc(-x * inv_sqrt2) - u;
    x -= err * sqrt_2pi * std::exp(0.5 * x * x);
    return x;
}

double normal_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t step) {
    return inverse_normal_cdf(uniform_draw(seed, path, step));
}

}  // namespace cbgame
