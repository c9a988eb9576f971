#pragma once

#include <optional>
#include <vector>

#include "berndt/bigfloat.hpp"
#include "berndt/zring.hpp"

namespace berndt {

enum class Sign { Plus, Minus };

inline const char* sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

// Arithmetic-geometric mean of positive a, b.
BigFloat agm(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec);

// Gamma(1/4) = sqrt(2 sqrt(2 pi) pi / agm(1, sqrt 2)), via the lemniscatic AGM.
BigFloat gamma_quarter(mpfr_prec_t prec);

// Complete elliptic integrals in the parameter x = k^2, 0 < x < 1:
// K = pi / (2 agm(1, sqrt(1-x))), E from the AGM c-sequence.
struct EllipticKE {
    BigFloat K, E;
};
EllipticKE elliptic_ke(const BigFloat& x, mpfr_prec_t prec);

// Derivatives z^(j)(x) for j = 0..n of z = (2/pi) K(x), by Taylor recursion
// of the first-order system K' = (E-(1-x)K)/(2x(1-x)), E' = (E-K)/(2x).
std::vector<BigFloat> z_jet_numeric(const BigFloat& x, long n, mpfr_prec_t prec);

// y(x) = pi K(1-x)/K(x), strictly decreasing from +inf to 0 on (0,1).
BigFloat y_of_x(const BigFloat& x, mpfr_prec_t prec);
// Inverse of y_of_x by bisection plus Newton (dy/dx = -1/(x(1-x) z^2)).
BigFloat x_of_y(const BigFloat& y, mpfr_prec_t prec);

// Jacobi elliptic functions by the descending Landen transformation.
struct JacobiValues {
    BigFloat sn, cn, dn;
};
JacobiValues jacobi_numeric(const BigFloat& u, const BigFloat& x, mpfr_prec_t prec);

// Hyperbolic sum families; n runs over positive integers and nh = n - 1/2.
//   Sbar:   sum (-1)^(n-1) n^p  / sinh^m(n y)
//   S:      sum          n^p  / sinh^m(n y)
//   Ctilde: sum (-1)^(n-1) nh^p / cosh^m(nh y)
//   Cprime: sum          nh^p / cosh^m(nh y)
enum class SumKind { Sbar, S, Ctilde, Cprime };

// Direct summation with a certified geometric tail bound; absolute error
// below 10^-digits.  Requires y > 0, m >= 1, p >= 0.
BigFloat sum_series(SumKind kind, long p, long m, const BigFloat& y, long digits);

struct QuadratureReport {
    BigFloat value;
    BigFloat tail_bound;  // rigorous bound on the dropped [T, inf) tail
    double cut = 0;       // T
    long panels = 0;
    long max_order = 0;   // largest Gauss-Legendre order used on a panel
};

// integral_0^inf x^a / (cos x + cosh x)^m dx   (Sign::Plus)
// integral_0^inf x^a / (cos x - cosh x)^m dx   (Sign::Minus)
// Adaptive panel Gauss-Legendre with panel width <= pi/2 and order doubling
// until panel agreement; absolute error below 10^-digits.  Below x = 1/8 the
// denominator is evaluated by its even Maclaurin series, whose terms all
// carry one sign, so the minus case loses no digits to cancellation.
QuadratureReport quad_berndt(long a, long m, Sign sign, long digits);

// Numeric value of a polynomial in X = Gamma^4(1/4), Y = 1/pi.
BigFloat eval_qxy(const QXYPoly& poly, long digits);

// Numeric value of a differential-ring element at x in (0,1).
BigFloat eval_zring_numeric(const ZRingElem& elem, const BigFloat& x, mpfr_prec_t prec);

// Nearest rational with denominator <= den_bound among the continued-fraction
// convergents of v, accepted only if it matches v to 10^-accept_digits.
std::optional<Rat> rational_reconstruct(const BigFloat& v, const Int& den_bound,
                                        long accept_digits);

}  // namespace berndt
