#pragma once

#include <mpfr.h>

#include <string>

#include "berndt/rational.hpp"

namespace berndt {

// Arbitrary-precision binary float.  Every value carries its own mpfr
// precision; operations round to the larger operand precision (MPFR_RNDN).
// There is no global precision state anywhere in this library.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec_bits = 64) {
        mpfr_init2(v_, prec_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec_bits);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long n, mpfr_prec_t prec);
    static BigFloat from_int(const Int& n, mpfr_prec_t prec);
    static BigFloat from_rat(const Rat& q, mpfr_prec_t prec);
    static BigFloat from_double(double d, mpfr_prec_t prec);
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exact value as a rational (the float is a dyadic rational).
    Rat to_exact_rat() const;
    // Nearest integer.
    Int round_to_int() const;

    // Scientific-notation decimal string with the given significant digits.
    std::string str(int digits = 20) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    mpfr_t v_;
};

// Decimal digits -> mpfr bits with headroom.
mpfr_prec_t digit_bits(long decimal_digits);

BigFloat bf_pi(mpfr_prec_t prec);
BigFloat bf_abs(const BigFloat& a);
BigFloat bf_sqrt(const BigFloat& a);
BigFloat bf_exp(const BigFloat& a);
BigFloat bf_log(const BigFloat& a);
BigFloat bf_sin(const BigFloat& a);
BigFloat bf_cos(const BigFloat& a);
BigFloat bf_sinh(const BigFloat& a);
BigFloat bf_cosh(const BigFloat& a);
BigFloat bf_asin(const BigFloat& a);
BigFloat bf_atan(const BigFloat& a);
BigFloat bf_gamma(const BigFloat& a);
BigFloat bf_pow_si(const BigFloat& a, long e);
BigFloat bf_mul_2si(const BigFloat& a, long e);
// 10^e at the given precision.
BigFloat bf_pow10(long e, mpfr_prec_t prec);

}  // namespace berndt
