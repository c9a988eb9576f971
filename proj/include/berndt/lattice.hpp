#pragma once

#include <optional>
#include <vector>

#include "berndt/bigfloat.hpp"
#include "berndt/rational.hpp"

namespace berndt {

// Lattice basis reduction (delta = 3/4) over exact integers; basis rows are
// reduced in place.
void lll_reduce(std::vector<std::vector<Int>>& basis);

// Searches for a small integer relation c (not all zero) with
// sum_i c_i v_i ~ 0, by reducing the lattice spanned by
// [e_i | round(10^scale_digits * v_i)].  Returns the candidate whose scaled
// residual is smallest; the caller must certify it against independent
// higher-precision values before trusting it.
std::optional<std::vector<Int>> integer_relation(const std::vector<BigFloat>& values,
                                                 long scale_digits);

}  // namespace berndt
