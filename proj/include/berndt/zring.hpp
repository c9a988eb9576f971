#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "berndt/polynomial.hpp"

namespace berndt {

// Raised when an exact value fails a shape requirement (for example a
// Gamma exponent that is not a multiple of 4 when converting to X,Y form).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomial in the differential ring Q(x)[v, v', z, z', z'', ...] modulo the
// relations v^2 = x(1-x), (v')^2 = (1-4s)/(4s), v v' = (1-2x)/2 with
// s = x(1-x).  After reduction ev, evp lie in {0,1} and never equal 1
// simultaneously; jets maps derivative order j to a positive exponent of
// z^(j).
struct ZMonoKey {
    int ev = 0;
    int evp = 0;
    std::map<int, int> jets;

    friend bool operator==(const ZMonoKey&, const ZMonoKey&) = default;
    friend bool operator<(const ZMonoKey& a, const ZMonoKey& b) {
        if (a.ev != b.ev) return a.ev < b.ev;
        if (a.evp != b.evp) return a.evp < b.evp;
        return a.jets < b.jets;
    }
};

// Polynomial in X = Gamma^4(1/4) and Y = 1/pi with exact rational
// coefficients.  X degrees are nonnegative.
class QXYPoly {
public:
    QXYPoly() = default;

    void add_term(const Rat& c, int deg_x, int deg_y);
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    friend QXYPoly operator+(const QXYPoly& a, const QXYPoly& b);
    friend QXYPoly operator-(const QXYPoly& a, const QXYPoly& b);
    friend bool operator==(const QXYPoly& a, const QXYPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rat> terms_;
};

// Exact value of the form  sum of  c * Gamma(1/4)^gExp * pi^(twoPiExp/2);
// pi exponents are stored doubled so half-integer powers stay integral.
class SpecialValue {
public:
    SpecialValue() = default;
    static SpecialValue term(const Rat& c, int g_exp, int two_pi_exp);

    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend SpecialValue operator+(const SpecialValue& a, const SpecialValue& b);
    friend SpecialValue operator*(const SpecialValue& a, const SpecialValue& b);
    SpecialValue scaled(const Rat& c) const;
    // Multiply by pi^k (integer k).
    SpecialValue pi_shifted(int k) const;
    SpecialValue pow(int e) const;

    // Interpret as a polynomial in X = Gamma^4(1/4), Y = 1/pi after an
    // additional shift by pi^{pi_shift}.  Throws StructuralError when a term
    // has a Gamma exponent not divisible by 4, a negative X degree, or a
    // half-integer pi exponent.
    QXYPoly to_qxy(int pi_shift = 0) const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rat> terms_;
};

// z^(n)(1/2) exactly: ((1/2)_n)^2 sqrt(pi) / Gamma^2(n/2 + 3/4), expressed
// through Gamma(1/4) powers.  Even n gives c*Gamma^2*pi^(-3/2), odd n gives
// c*Gamma^(-2)*pi^(1/2).
SpecialValue zjet_at_half(long n);

// Element of the differential ring: finite sum of monomials with rational-
// function coefficients in x.
class ZRingElem {
public:
    ZRingElem() = default;

    static ZRingElem coefficient(const RatFunX& c);
    static ZRingElem v();
    static ZRingElem vprime();
    static ZRingElem zjet(int order, int exponent = 1);

    const std::map<ZMonoKey, RatFunX>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_jet_order() const;

    friend ZRingElem operator+(const ZRingElem& a, const ZRingElem& b);
    friend ZRingElem operator-(const ZRingElem& a, const ZRingElem& b);
    friend ZRingElem operator*(const ZRingElem& a, const ZRingElem& b);
    ZRingElem operator-() const;
    ZRingElem scaled(const RatFunX& c) const;
    friend bool operator==(const ZRingElem& a, const ZRingElem& b) {
        return a.terms_ == b.terms_;
    }

    // d/dx with v -> v', v' -> -v/(4 s^2), z^(j) -> z^(j+1) and rational
    // function coefficients differentiated.
    ZRingElem ddx() const;
    // d/dy = -x(1-x) z^2 * d/dx.
    ZRingElem ddy() const;
    ZRingElem ddy_n(long n) const;

    // Exact substitution x = 1/2, v = 1/2, v' = 0, z^(j) = zjet_at_half(j).
    SpecialValue eval_at_half() const;

    std::string str() const;

private:
    std::map<ZMonoKey, RatFunX> terms_;

    void add_term(ZMonoKey key, RatFunX coeff);
};

}  // namespace berndt
