#pragma once

#include <string>
#include <vector>

#include "berndt/bigfloat.hpp"
#include "berndt/rational.hpp"

namespace berndt {

// Dense univariate polynomial over Q.  coeffs[i] multiplies x^i; trailing
// zeros are trimmed, the zero polynomial has an empty coefficient vector and
// degree -1.
class PolyX {
public:
    PolyX() = default;
    explicit PolyX(const Rat& c) {
        if (!c.is_zero()) coeffs_ = {c};
    }
    explicit PolyX(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyX monomial(const Rat& c, size_t deg);
    // x(1-x) and its derivative 1-2x
    static PolyX sigma();
    static PolyX sigma_prime();

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    PolyX operator-() const;
    friend PolyX operator+(const PolyX& a, const PolyX& b);
    friend PolyX operator-(const PolyX& a, const PolyX& b);
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    PolyX& operator+=(const PolyX& o) { return *this = *this + o; }
    PolyX& operator-=(const PolyX& o) { return *this = *this - o; }
    PolyX& operator*=(const PolyX& o) { return *this = *this * o; }
    friend PolyX operator*(const Rat& c, const PolyX& p);
    friend bool operator==(const PolyX& a, const PolyX& b) { return a.coeffs_ == b.coeffs_; }

    PolyX derivative() const;
    Rat eval(const Rat& x) const;
    BigFloat eval(const BigFloat& x) const;
    // f(1-x), used by the sigma-parity criterion
    PolyX at_one_minus_x() const;

    // Quotient and remainder over Q; divisor must be nonzero.
    static void divmod(const PolyX& a, const PolyX& b, PolyX& q, PolyX& r);
    // Monic gcd over Q.
    static PolyX gcd(PolyX a, PolyX b);

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

// Reduced rational function over Q: gcd(num, den) = 1 and den monic.
class RatFunX {
public:
    RatFunX() : num_(), den_(PolyX(Rat(1))) {}
    RatFunX(const Rat& c) : num_(PolyX(c)), den_(PolyX(Rat(1))) {}
    RatFunX(const PolyX& p) : num_(p), den_(PolyX(Rat(1))) {}
    RatFunX(PolyX num, PolyX den);

    const PolyX& num() const { return num_; }
    const PolyX& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Requires is_polynomial().
    PolyX as_poly() const;

    RatFunX operator-() const;
    friend RatFunX operator+(const RatFunX& a, const RatFunX& b);
    friend RatFunX operator-(const RatFunX& a, const RatFunX& b);
    friend RatFunX operator*(const RatFunX& a, const RatFunX& b);
    friend RatFunX operator/(const RatFunX& a, const RatFunX& b);
    RatFunX& operator+=(const RatFunX& o) { return *this = *this + o; }
    RatFunX& operator-=(const RatFunX& o) { return *this = *this - o; }
    RatFunX& operator*=(const RatFunX& o) { return *this = *this * o; }
    friend bool operator==(const RatFunX& a, const RatFunX& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunX derivative() const;
    // Exact evaluation; throws if the denominator vanishes at x.
    Rat eval(const Rat& x) const;
    BigFloat eval(const BigFloat& x) const;

    std::string str(const std::string& var = "x") const;

private:
    PolyX num_, den_;
    void reduce();
};

}  // namespace berndt
