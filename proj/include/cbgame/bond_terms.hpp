#pragma once

namespace cbgame {

/// Contract constants of the convertible bond. `shares` is derived as
/// face_value / (s0 * eta); the put price is carried but never exercised and
/// the redemption ratio is fixed at 1 (maturity pays the face value).
struct BondTerms {
    double face_value = 100.0;     ///< N, paid at maturity
    double call_price = 110.0;     ///< K, paid on call
    double redemption_ratio = 1.0; ///< kappa
    int notice_days = 10;          ///< call notice period
    double eta = 1.1;
    double shares = 0.0;           ///< n = N / (s0 * eta)
    double put_price = 0.0;        ///< P, carried unused

    /// Fills `shares` from s0 and validates the contract against it.
    static BondTerms make(double face_value, double call_price, int notice_days,
                          double eta, double put_price, double s0);

    /// Throws std::invalid_argument when the initial conditions fail:
    /// K > N, P < N, eta > 1, n*s0 < N.
    void validate(double s0) const;
};

}  // namespace cbgame
