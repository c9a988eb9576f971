#pragma once

#include <vector>

#include "berndt/polynomial.hpp"

namespace berndt {

// Truncated Maclaurin series in u whose coefficients are polynomials in the
// elliptic parameter x = k^2.  coeffs()[i] multiplies u^i; exponents up to
// order() inclusive are tracked.
class XPowerSeries {
public:
    XPowerSeries() = default;
    XPowerSeries(std::vector<PolyX> coeffs, long order)
        : c_(std::move(coeffs)), order_(order) {
        c_.resize(static_cast<size_t>(order_) + 1);
    }

    long order() const { return order_; }
    const PolyX& coeff(size_t i) const;
    const std::vector<PolyX>& coeffs() const { return c_; }

    XPowerSeries truncated(long new_order) const;
    friend XPowerSeries operator*(const XPowerSeries& a, const XPowerSeries& b);
    // Reciprocal of a unit series (constant coefficient 1).
    XPowerSeries reciprocal() const;

private:
    std::vector<PolyX> c_;
    long order_ = -1;
};

struct JacobiSeries {
    XPowerSeries sn, cn, dn;
};

// Maclaurin series of sn, cn, dn in u to the given truncation order, from
// the system sn' = cn dn, cn' = -sn dn, dn' = -x sn cn with sn = u + O(u^2),
// cn = dn = 1 + O(u^2).  Memoized; safe under concurrent calls.
JacobiSeries sn_cn_dn(long order);

// p_n = n! [u^n] (sn/dn), defined for odd n >= 1.  p_1 = 1, p_3 = 2x - 1.
PolyX p_poly(long n);

// q_n = n! [u^n] (u dn/sn), defined for even n >= 0.  q_0 = 1, q_2 = (1-2x)/3.
PolyX q_poly(long n);

// Coefficients of sn^2 up to the given order.
std::vector<PolyX> sn_sq_coeffs(long order);

}  // namespace berndt
