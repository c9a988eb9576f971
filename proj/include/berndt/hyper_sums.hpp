#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "berndt/numerics.hpp"
#include "berndt/zring.hpp"

namespace berndt {

// The four pipeline-legal hyperbolic sum families:
//   Sbar   : sum (-1)^(n-1) n^p / sinh^m(n y)        (p odd, m odd)
//   Ctilde : sum (-1)^(n-1) nh^p / cosh^m(nh y)      (p odd, m odd), nh = (2n-1)/2
//   Cprime : sum nh^p / cosh^m(nh y)                 (p even, m even)
//   S      : sum n^p / sinh^m(n y)                   (p even, m even)
enum class SumFamily { Sbar, S, Ctilde, Cprime };

const char* family_name(SumFamily family);
SumKind family_sum_kind(SumFamily family);

// Legality: parity constraints above, m >= 1, and the base-index floor
// p >= m (so the reduction lands on existing bases), tightened to
// p >= m+2 for Sbar: the p = m tail would need the index-1 sum
// sum (-1)^(n-1) n / sinh(n y), which is quasi-modular and has no closed
// form in this ring.
bool family_args_legal(SumFamily family, long p, long m);
void require_family_args(SumFamily family, long p, long m);

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One template of an ansatz: z^zExp * prod (z^(j))^e * sigma-polynomial
// (degree <= sigmaDegBound) * optional sigma' factor * optional v factor.
struct MonomialTemplate {
    int z_exp = 0;
    std::map<int, int> jet_pattern;  // derivative order -> exponent
    int sigma_deg_bound = 0;
    bool sigma_prime = false;
    bool v_factor = false;
};

struct AnsatzShape {
    std::vector<MonomialTemplate> templates;
    long dimension() const;
};

// Membership shapes of the fitted families; extra_deg widens every
// sigma-degree bound (used by the adaptive fitting loop).
AnsatzShape sbar_shape(long s, int extra_deg = 0);
AnsatzShape s2_shape(long s, int extra_deg = 0);

// Exact closed-form bases.
ZRingElem ctilde_base(long s);  // Ctilde_{2s+1,1}, s >= 0
ZRingElem cprime_base(long s);  // Cprime_{2s,2},  s >= 1

// Fitted closed-form bases (certified before return, cached).
ZRingElem sbar_base(long s);  // Sbar_{2s+1,1}, s >= 1
ZRingElem s2_base(long s);    // S_{2s,2},     s >= 1

// Determines exact rational coefficients for the given shape so that the
// resulting element equals the (p, m) sum of `kind` as a function of x;
// samples >= 2*dimension points, solves over BigFloat, reconstructs
// rationals, and certifies at held-out points before returning.
ZRingElem fit_ansatz(const AnsatzShape& shape, SumKind kind, long p, long m);

struct ReductionTerm {
    long deriv_order;  // even: apply d^deriv_order/dy^deriv_order to the base
    long base_index;   // base sum index (subscript p of the base family)
    Rat coeff;
};

// Expresses the power-m sum through y-derivatives of order-1/order-2 bases,
// with coefficients from row k of the relevant inverse triangle.
std::vector<ReductionTerm> reduce_power(SumFamily family, long p, long m);

// Base element at a family's own base order (m=1 for Sbar/Ctilde, m=2 for
// S/Cprime) and the given sum index.
ZRingElem family_base(SumFamily family, long index);

// Full symbolic closed form of the (family, p, m) sum via reduce_power.
ZRingElem family_sum(SumFamily family, long p, long m);

// ---- fixture store ------------------------------------------------------
// Certified fitted bases can be frozen to JSON and reloaded; a loaded entry
// is re-certified at ~50 digits before entering the cache, so a corrupted
// fixture fails loudly with its (family, s) identity.
long load_fitted_bases(const std::string& path);
void save_fitted_bases(const std::string& path);
void set_fitted_write_through(const std::string& path);  // "" disables
void clear_fitted_bases();

}  // namespace berndt
