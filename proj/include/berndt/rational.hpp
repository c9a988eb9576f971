#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace berndt {

using Int = mpz_class;

// Exact rational number.  Invariants: always reduced, denominator positive,
// zero stored as 0/1.  Division by zero throws.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(const Int& n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) { require_nonzero_den(); canon(); }
    Rat(const Int& n, const Int& d) : q_(n, d) { require_nonzero_den(); canon(); }
    explicit Rat(const mpq_class& q) : q_(q) { require_nonzero_den(); canon(); }

    static std::optional<Rat> from_string(const std::string& s);

    const Int num() const { return Int(q_.get_num()); }
    const Int den() const { return Int(q_.get_den()); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { Rat r; r.q_ = -q_; return r; }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        Rat r;
        r.q_ = 1 / q_;
        return r;
    }

    // Integer power; negative exponents require a nonzero base.
    Rat pow(long e) const;

    Rat abs() const { Rat r; r.q_ = ::abs(q_); return r; }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;

    void canon() { q_.canonicalize(); }
    void require_nonzero_den() {
        if (sgn(q_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
    }
};

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// 2^e as an exact rational, e of either sign.
Rat pow2(long e);

}  // namespace berndt
