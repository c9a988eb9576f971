#pragma once

#include <map>
#include <string>

#include "berndt/hyper_sums.hpp"

namespace berndt {

// One Berndt-type integral: integral_0^inf x^a / (cos x + s cosh x)^m dx,
// s = +1 (plus) or -1 (minus).  Exact closed forms exist precisely for
//   plus : a = 4p+1 with p >= floor(m/2)
//   minus: a >= 2m and a - 2m = 1 (mod 4)
struct IntegralSpec {
    long a = 0;
    long m = 1;
    Sign sign = Sign::Plus;
};

// Empty string when valid, otherwise a message naming the violated rule.
std::string spec_violation(const IntegralSpec& spec);
bool spec_valid(const IntegralSpec& spec);
void require_spec(const IntegralSpec& spec);  // throws std::domain_error

// The exact Gaussian-rational constant multiplying the integral in the
// contour identity; always real and nonzero on valid specs.
Rat prefactor(const IntegralSpec& spec);

// Right-hand side of the contour identity as a pi-weighted combination of
// ring elements: key = exponent of pi, value = element to evaluate at
// x = 1/2 (y = pi).
std::map<long, ZRingElem> rhs_assembly(const IntegralSpec& spec);

// The exact value of the integral as a polynomial in X = Gamma^4(1/4),
// Y = 1/pi with rational coefficients.
QXYPoly berndt_eval(const IntegralSpec& spec);

struct StructureWindow {
    long x_min = 0, x_max = 0;
    int x_parity = 0;  // 0: even degrees, 1: odd degrees
    long y_min = 0, y_max = 0;
    bool contains(long x_deg, long y_deg) const {
        return x_deg >= x_min && x_deg <= x_max && (x_deg % 2) == x_parity &&
               y_deg >= y_min && y_deg <= y_max;
    }
};

StructureWindow structure_window(const IntegralSpec& spec);

// True iff every monomial of poly sits inside the window for spec.
bool check_structure(const QXYPoly& poly, const IntegralSpec& spec);

}  // namespace berndt
