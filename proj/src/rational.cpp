#include "berndt/rational.hpp"

#include <ostream>

namespace berndt {

std::optional<Rat> Rat::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s, 10);
            return Rat(n);
        }
        Int n(s.substr(0, slash), 10);
        Int d(s.substr(slash + 1), 10);
        if (sgn(d) == 0) return std::nullopt;
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    const Rat base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpq_class acc;
    mpz_pow_ui(acc.get_num_mpz_t(), base.q_.get_num_mpz_t(), k);
    mpz_pow_ui(acc.get_den_mpz_t(), base.q_.get_den_mpz_t(), k);
    Rat r;
    r.q_ = acc;  // base reduced with positive denominator, so powers are too
    return r;
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat pow2(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(p) : Rat(Int(1), p);
}

}  // namespace berndt
