#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berndt/contour.hpp"

namespace berndt {

enum class ConjectureId { PlusX1, PlusX5, X9M6 };

std::optional<ConjectureId> conjecture_id_from(const std::string& name);
const char* conjecture_name(ConjectureId id);

// Conjectured monomial support in (X-degree, Y-degree) for the integral
// x^a/(cos x + cosh x)^m with a = 1 (PlusX1) or a = 5 (PlusX5); index
// ranges producing negative degrees are filtered out.
std::vector<std::pair<long, long>> conjecture_support(ConjectureId id, long m);

struct ConjectureCaseResult {
    long a = 0, m = 0;
    bool engine_exact = false;  // support checked against the exact pipeline
    bool support_ok = false;
    std::string detail;
};

struct ConjectureReport {
    std::vector<ConjectureCaseResult> cases;
    bool all_ok = true;
};

// Screens both parities m = 2n-1, 2n for n = 1..n_max: engine-legal cases
// are checked exactly; the rest are fitted to the conjectured support by
// quadrature plus integer-relation detection, certified at raised
// precision.  Verdicts report consistency, never proof.
ConjectureReport screen_structural(ConjectureId id, long n_max, long digits);

struct X9M6Result {
    BigFloat quadrature;
    BigFloat reference;
    long agreement_digits = 0;
};

// Compares quadrature of x^9/(cos x + cosh x)^6 against the conjectured
// 16-term constant.
X9M6Result check_x9m6(long digits);

}  // namespace berndt
