#include "berndt/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace berndt {

namespace {

std::mutex bernoulli_mutex;
// all indices, including the odd zeros; grown monotonically
std::vector<Rat> bernoulli_cache;

// sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, so
// B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j.
void extend_bernoulli(size_t n) {
    if (bernoulli_cache.empty()) bernoulli_cache.push_back(Rat(1));
    for (size_t k = bernoulli_cache.size(); k <= n; ++k) {
        if (k > 1 && k % 2 == 1) {
            bernoulli_cache.push_back(Rat(0));
            continue;
        }
        Rat acc(0);
        for (size_t j = 0; j < k; ++j)
            acc += Rat(binomial(k + 1, j)) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / Rat(static_cast<long>(k) + 1));
    }
}

}  // namespace

Rat bernoulli(long n) {
    if (n < 0) throw std::domain_error("bernoulli: negative index");
    if (n % 2 != 0)
        throw std::domain_error("bernoulli: odd index " + std::to_string(n) +
                                " not served by the even-index table");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli(static_cast<size_t>(n));
    return bernoulli_cache[static_cast<size_t>(n)];
}

Rat even_zeta_rational(long k) {
    if (k < 1) throw std::domain_error("even_zeta_rational: k must be >= 1");
    Rat r = bernoulli(2 * k) * pow2(2 * k - 1) / Rat(factorial(static_cast<unsigned long>(2 * k)));
    return (k % 2 == 0) ? -r : r;
}

Rat gamma_lm(long l, long m) {
    if (l < 0) throw std::domain_error("gamma_lm: l must be >= 0");
    if (m < 1) throw std::domain_error("gamma_lm: m must be >= 1");
    // f_k = (1 - 2^(1-2k)) B_{2k} / (2k)!
    std::vector<Rat> f(static_cast<size_t>(l) + 1);
    for (long k = 0; k <= l; ++k)
        f[static_cast<size_t>(k)] = (Rat(1) - pow2(1 - 2 * k)) * bernoulli(2 * k) /
                                    Rat(factorial(static_cast<unsigned long>(2 * k)));
    std::vector<Rat> conv{Rat(1)};
    for (long rep = 0; rep < m; ++rep) {
        std::vector<Rat> next(static_cast<size_t>(l) + 1, Rat(0));
        for (size_t i = 0; i < conv.size() && i <= static_cast<size_t>(l); ++i) {
            if (conv[i].is_zero()) continue;
            for (size_t j = 0; i + j <= static_cast<size_t>(l); ++j)
                next[i + j] += conv[i] * f[j];
        }
        conv = std::move(next);
    }
    Rat g = conv[static_cast<size_t>(l)] * pow2(l);
    return (m % 2 != 0) ? -g : g;
}

}  // namespace berndt
