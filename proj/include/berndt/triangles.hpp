#pragma once

#include <vector>

#include "berndt/rational.hpp"

namespace berndt {

// Lower-triangular coefficient families for even derivatives of reciprocal
// hyperbolic powers:
//   B:      d^{2k}/dt^{2k} (1/sinh t)   = sum_l entries[k][l] / sinh^(2l+1) t
//   D:      d^{2k}/dt^{2k} (1/sinh^2 t) = sum_l entries[k][l] / sinh^(2l+2) t
//   Btilde: d^{2k}/dt^{2k} (1/cosh t)   = sum_l entries[k][l] / cosh^(2l+1) t
//   Dtilde: d^{2k}/dt^{2k} (1/cosh^2 t) = sum_l entries[k][l] / cosh^(2l+2) t
// All rows are generated by exact symbolic Laurent differentiation (product
// rule plus cosh^2 = 1 + sinh^2), never from printed recurrences.
enum class TriangleKind { B, D, Btilde, Dtilde };

struct CoeffTriangle {
    TriangleKind kind;
    // entries[k][l] for 0 <= l <= k <= max_k
    std::vector<std::vector<Rat>> entries;
    // exact lower-triangular inverse of the same size
    std::vector<std::vector<Rat>> inverse;
};

// Rows 0..max_k of the requested family.  Memoized internally; returns a
// copy so callers never observe cache growth.  Safe under concurrent calls.
CoeffTriangle coeff_triangle(TriangleKind kind, long max_k);

const char* triangle_kind_name(TriangleKind kind);

}  // namespace berndt
