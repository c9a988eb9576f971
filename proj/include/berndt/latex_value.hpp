#pragma once

#include <string>
#include <vector>

#include "berndt/contour.hpp"

namespace berndt {

// Canonical LaTeX for an exact value: terms ascending in (X-degree,
// Y-degree), each as \frac{n\Gamma^{4dx}(1/4)}{odd\cdot 2^{e}\pi^{dy}}.
std::string render_latex(const QXYPoly& poly);

// Parses a LaTeX closed-form expression into the exact polynomial in
// X = Gamma^4(1/4), Y = 1/pi.  Accepts \frac terms and bare products,
// integer factors with ^ powers, \cdot separators, \pi powers, \Gamma
// with optional exponent and optional (1/4)/(3/4) argument; Gamma(3/4)
// powers are normalized through Gamma(1/4)Gamma(3/4) = pi sqrt(2).
// Whitespace is ignored everywhere.  Throws std::runtime_error on
// malformed input or on terms outside Q[X, Y].
QXYPoly parse_latex(const std::string& text);

// Published reference values: the four order-1 integrals and the six
// higher-order examples, with their displayed LaTeX verbatim.
struct ReferenceValue {
    long a;
    long m;
    Sign sign;
    const char* latex;
};
const std::vector<ReferenceValue>& reference_values();

// The 16-term conjectured constant for integral x^9/(cos x + cosh x)^6.
const char* x9m6_reference_latex();

}  // namespace berndt
