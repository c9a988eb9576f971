#include "berndt/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace berndt {

PolyX PolyX::monomial(const Rat& c, size_t deg) {
    if (c.is_zero()) return PolyX();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return PolyX(std::move(v));
}

PolyX PolyX::sigma() { return PolyX(std::vector<Rat>{Rat(0), Rat(1), Rat(-1)}); }
PolyX PolyX::sigma_prime() { return PolyX(std::vector<Rat>{Rat(1), Rat(-2)}); }

const Rat& PolyX::coeff(size_t i) const {
    static const Rat zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

PolyX PolyX::operator-() const {
    PolyX r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyX operator+(const PolyX& a, const PolyX& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return PolyX(std::move(v));
}

PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }

PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return PolyX();
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyX(std::move(v));
}

PolyX operator*(const Rat& c, const PolyX& p) {
    if (c.is_zero()) return PolyX();
    PolyX r(p);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

PolyX PolyX::derivative() const {
    if (coeffs_.size() <= 1) return PolyX();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    return PolyX(std::move(v));
}

Rat PolyX::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

BigFloat PolyX::eval(const BigFloat& x) const {
    BigFloat acc(x.prec());
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + BigFloat::from_rat(coeffs_[i], x.prec());
    return acc;
}

PolyX PolyX::at_one_minus_x() const {
    // Horner in (1-x)
    PolyX acc;
    const PolyX one_minus_x(std::vector<Rat>{Rat(1), Rat(-1)});
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * one_minus_x + PolyX(coeffs_[i]);
    return acc;
}

void PolyX::divmod(const PolyX& a, const PolyX& b, PolyX& q, PolyX& r) {
    if (b.is_zero()) throw std::domain_error("PolyX: division by zero polynomial");
    q = PolyX();
    r = a;
    const Rat lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const size_t shift = static_cast<size_t>(r.degree() - b.degree());
        const Rat c = r.leading() * lead_inv;
        const PolyX t = PolyX::monomial(c, shift);
        q += t;
        r -= t * b;
    }
}

PolyX PolyX::gcd(PolyX a, PolyX b) {
    while (!b.is_zero()) {
        PolyX q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inverse() * a;
}

std::string PolyX::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rat ac = c.abs();
        if (i == 0) {
            os << ac.str();
        } else {
            if (ac != Rat(1)) os << ac.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatFunX::RatFunX(PolyX num, PolyX den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunX: zero denominator");
    reduce();
}

void RatFunX::reduce() {
    if (num_.is_zero()) {
        den_ = PolyX(Rat(1));
        return;
    }
    PolyX g = PolyX::gcd(num_, den_);
    if (g.degree() > 0) {
        PolyX q, r;
        PolyX::divmod(num_, g, q, r);
        num_ = q;
        PolyX::divmod(den_, g, q, r);
        den_ = q;
    }
    const Rat lead_inv = den_.leading().inverse();
    num_ = lead_inv * num_;
    den_ = lead_inv * den_;
}

PolyX RatFunX::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFunX: not a polynomial");
    return den_.leading().inverse() * num_;
}

RatFunX RatFunX::operator-() const {
    RatFunX r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunX operator+(const RatFunX& a, const RatFunX& b) {
    return RatFunX(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunX operator-(const RatFunX& a, const RatFunX& b) { return a + (-b); }

RatFunX operator*(const RatFunX& a, const RatFunX& b) {
    return RatFunX(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunX operator/(const RatFunX& a, const RatFunX& b) {
    if (b.is_zero()) throw std::domain_error("RatFunX: division by zero");
    return RatFunX(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunX RatFunX::derivative() const {
    return RatFunX(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFunX::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunX: pole at evaluation point");
    return num_.eval(x) / d;
}

BigFloat RatFunX::eval(const BigFloat& x) const { return num_.eval(x) / den_.eval(x); }

std::string RatFunX::str(const std::string& var) const {
    if (is_polynomial()) return as_poly().str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace berndt
