#include "berndt/lattice.hpp"

#include <stdexcept>

namespace berndt {

namespace {

Rat dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return Rat(acc);
}

Int round_rat(const Rat& q) {
    // nearest integer, halves away from the pull of floor(q + 1/2)
    const Rat shifted = q + Rat(1, 2);
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.num().get_mpz_t(), shifted.den().get_mpz_t());
    return out;
}

// Gram-Schmidt data kept exactly: mu[i][j] for j < i, and B[i] = |b*_i|^2.
struct Gso {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> B;
};

Gso compute_gso(const std::vector<std::vector<Int>>& basis) {
    const size_t n = basis.size();
    Gso g;
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    g.B.assign(n, Rat(0));
    // b*_i = b_i - sum_{j<i} mu_ij b*_j; work with r_ij = <b_i, b*_j>
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            Rat v = dot(basis[i], basis[j]);
            for (size_t k = 0; k < j; ++k) v = v - g.mu[j][k] * r[i][k];
            r[i][j] = v;
            if (j < i) {
                if (g.B[j].is_zero()) throw std::runtime_error("lll: dependent basis rows");
                g.mu[i][j] = v / g.B[j];
            } else {
                g.B[i] = v;
            }
        }
    }
    return g;
}

void size_reduce(std::vector<std::vector<Int>>& basis, Gso& g, size_t k, size_t j) {
    const Rat& m = g.mu[k][j];
    if (m.abs() * Rat(2) <= Rat(1)) return;
    const Int q = round_rat(m);
    for (size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= q * basis[j][t];
    g.mu[k][j] = g.mu[k][j] - Rat(q);
    for (size_t t = 0; t < j; ++t) g.mu[k][t] = g.mu[k][t] - Rat(q) * g.mu[j][t];
}

}  // namespace

void lll_reduce(std::vector<std::vector<Int>>& basis) {
    const size_t n = basis.size();
    if (n < 2) return;
    Gso g = compute_gso(basis);
    const Rat delta(3, 4);

    size_t k = 1;
    while (k < n) {
        size_reduce(basis, g, k, k - 1);
        if (g.B[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
            for (size_t j = k - 1; j-- > 0;) size_reduce(basis, g, k, j);
            ++k;
            continue;
        }
        // swap rows k-1 and k with incremental GSO update
        std::swap(basis[k - 1], basis[k]);
        const Rat u = g.mu[k][k - 1];
        const Rat Bnew = g.B[k] + u * u * g.B[k - 1];
        g.mu[k][k - 1] = u * g.B[k - 1] / Bnew;
        g.B[k] = g.B[k - 1] * g.B[k] / Bnew;
        g.B[k - 1] = Bnew;
        for (size_t i = k + 1; i < n; ++i) {
            const Rat a = g.mu[i][k - 1];
            const Rat b = g.mu[i][k];
            g.mu[i][k - 1] = g.mu[k][k - 1] * a + (Rat(1) - g.mu[k][k - 1] * u) * b;
            g.mu[i][k] = a - u * b;
        }
        for (size_t j = 0; j + 1 < k; ++j) std::swap(g.mu[k - 1][j], g.mu[k][j]);
        if (k > 1) --k;
    }
}

std::optional<std::vector<Int>> integer_relation(const std::vector<BigFloat>& values,
                                                 long scale_digits) {
    const size_t n = values.size();
    if (n < 2) return std::nullopt;

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(scale_digits));
    const Rat scale_rat{scale};

    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n + 1, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
        const Rat scaled = values[i].to_exact_rat() * scale_rat;
        basis[i][n] = round_rat(scaled);
    }
    lll_reduce(basis);

    // candidate: reduced row with the smallest scaled residual among rows
    // with a nonzero coefficient part
    std::optional<std::vector<Int>> best;
    Int best_residual;
    for (const auto& row : basis) {
        bool nonzero = false;
        for (size_t i = 0; i < n; ++i)
            if (row[i] != 0) nonzero = true;
        if (!nonzero) continue;
        Int residual = row[n];
        mpz_abs(residual.get_mpz_t(), residual.get_mpz_t());
        if (!best || residual < best_residual) {
            best = std::vector<Int>(row.begin(), row.begin() + static_cast<long>(n));
            best_residual = residual;
        }
    }
    return best;
}

}  // namespace berndt
