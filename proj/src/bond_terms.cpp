#include "cbgame/bond_terms.hpp"

#include <cmath>
#include <stdexcept>

namespace cbgame {

BondTerms BondTerms::make(double face_value, double call_price, int notice_days,
                          double eta, double put_price, double s0) {
    BondTerms terms;
    terms.face_value = face_value;
    terms.call_price = call_price;
    terms.notice_days = notice_days;
    terms.eta = eta;
    terms.put_price = put_price;
    terms.shares = face_value / (s0 * eta);
    terms.validate(s0);
    return terms;
}

void BondTerms::validate(double s0) const {
    if (!(face_value > 0.0) || !std::isfinite(face_value)) {
        throw std::invalid_argument("BondTerms: face value must be positive and finite");
    }
    if (!(call_price > face_value)) {
        throw std::invalid_argument("BondTerms: call price must exceed the face value");
    }
    if (!(put_price < face_value)) {
        throw std::invalid_argument("BondTerms: put price must be below the face value");
    }
    if (!(eta > 1.0)) {
        throw std::invalid_argument("BondTerms: eta must exceed 1");
    }
    if (notice_days < 0) {
        throw std::invalid_argument("BondTerms: notice period must be >= 0");
    }
    if (!(shares * s0 < face_value)) {
        throw std::invalid_argument("BondTerms: shares * s0 must stay below the face value");
    }
}

}  // namespace cbgame
