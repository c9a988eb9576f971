#pragma once

#include "berndt/rational.hpp"

namespace berndt {

// Bernoulli number B_n for even n >= 0 (generating-function convention,
// B_1 = -1/2 internally).  Odd n is rejected: this table serves only the
// even-index values the rest of the engine consumes.  Memoized; safe under
// concurrent calls.
Rat bernoulli(long n);

// zeta(2k) / pi^(2k) = (-1)^(k+1) B_{2k} 2^(2k-1) / (2k)!, k >= 1.
Rat even_zeta_rational(long k);

// gamma_{l,m} = (-1)^m 2^l sum over compositions k_1+...+k_m = l of
// prod_j (1 - 2^(1-2k_j)) B_{2k_j} / (2k_j)!.  Computed by m-fold sequence
// convolution in O(l*m) ring operations.  Requires l >= 0, m >= 1.
Rat gamma_lm(long l, long m);

}  // namespace berndt
