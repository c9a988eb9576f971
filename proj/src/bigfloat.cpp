#include "berndt/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace berndt {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_int(const Int& n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rat(const Rat& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: unparsable literal: " + s);
    return r;
}

Rat BigFloat::to_exact_rat() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigFloat: non-finite value");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return Rat(q);
}

Int BigFloat::round_to_int() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigFloat: non-finite value");
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string BigFloat::str(int digits) const {
    if (digits < 2) digits = 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

mpfr_prec_t digit_bits(long decimal_digits) {
    return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623 + 24);
}

BigFloat bf_pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

#define BF_UNARY(name, fn)                          \
    BigFloat name(const BigFloat& a) {              \
        BigFloat r(a.prec());                       \
        fn(r.raw(), a.raw(), MPFR_RNDN);            \
        return r;                                   \
    }

BF_UNARY(bf_abs, mpfr_abs)
BF_UNARY(bf_sqrt, mpfr_sqrt)
BF_UNARY(bf_exp, mpfr_exp)
BF_UNARY(bf_log, mpfr_log)
BF_UNARY(bf_sin, mpfr_sin)
BF_UNARY(bf_cos, mpfr_cos)
BF_UNARY(bf_sinh, mpfr_sinh)
BF_UNARY(bf_cosh, mpfr_cosh)
BF_UNARY(bf_asin, mpfr_asin)
BF_UNARY(bf_atan, mpfr_atan)
BF_UNARY(bf_gamma, mpfr_gamma)

#undef BF_UNARY

BigFloat bf_pow_si(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat bf_mul_2si(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat bf_pow10(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace berndt
