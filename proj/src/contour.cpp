#include "berndt/contour.hpp"

#include <sstream>

#include "berndt/bernoulli.hpp"

namespace berndt {

namespace {

struct GaussRat {
    Rat re, im;
};

GaussRat gmul(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat gdiv(const GaussRat& a, const GaussRat& b) {
    const Rat n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw std::domain_error("gaussian division by zero");
    const GaussRat conj{b.re, -b.im};
    GaussRat r = gmul(a, conj);
    return {r.re / n, r.im / n};
}

GaussRat gpow(GaussRat base, long e) {
    GaussRat r{Rat(1), Rat(0)};
    for (; e > 0; --e) r = gmul(r, base);
    return r;
}

GaussRat ipow(long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {Rat(1), Rat(0)};
        case 1: return {Rat(0), Rat(1)};
        case 2: return {Rat(-1), Rat(0)};
        default: return {Rat(0), Rat(-1)};
    }
}

}  // namespace

std::string spec_violation(const IntegralSpec& spec) {
    std::ostringstream os;
    if (spec.m < 1) {
        os << "m must be >= 1 (got m=" << spec.m << ")";
        return os.str();
    }
    if (spec.a < 1) {
        os << "a must be >= 1 (got a=" << spec.a << ")";
        return os.str();
    }
    if (spec.sign == Sign::Plus) {
        if (spec.a % 4 != 1) {
            os << "plus sign needs a = 1 (mod 4); a=" << spec.a << " has a mod 4 = "
               << spec.a % 4;
            return os.str();
        }
        const long p = (spec.a - 1) / 4;
        if (p < spec.m / 2) {
            os << "plus sign needs p >= floor(m/2) where a = 4p+1; p=" << p
               << " < floor(" << spec.m << "/2) = " << spec.m / 2;
            return os.str();
        }
    } else {
        if (spec.a < 2 * spec.m) {
            os << "minus sign needs a >= 2m; a=" << spec.a << " < 2m=" << 2 * spec.m;
            return os.str();
        }
        if ((spec.a - 2 * spec.m) % 4 != 1) {
            os << "minus sign needs a - 2m = 1 (mod 4); a-2m=" << spec.a - 2 * spec.m
               << " has (a-2m) mod 4 = " << (spec.a - 2 * spec.m) % 4;
            return os.str();
        }
    }
    return {};
}

bool spec_valid(const IntegralSpec& spec) { return spec_violation(spec).empty(); }

void require_spec(const IntegralSpec& spec) {
    const std::string why = spec_violation(spec);
    if (!why.empty()) throw std::domain_error(why);
}

Rat prefactor(const IntegralSpec& spec) {
    require_spec(spec);
    const long a = spec.a, m = spec.m;
    GaussRat num{Rat(1), Rat(0)};
    GaussRat ia1 = ipow(a + 1);
    if (spec.sign == Sign::Minus && m % 2 == 1) {
        ia1.re = -ia1.re;
        ia1.im = -ia1.im;
    }
    num.re = num.re - ia1.re;
    num.im = num.im - ia1.im;

    GaussRat den = gpow({Rat(1), Rat(1)}, a - 1);
    if (spec.sign == Sign::Minus) den = gmul(den, ipow(m));

    GaussRat q = gdiv(num, den);
    const Rat scale = pow2(m - 2);
    q.re = q.re * scale;
    q.im = q.im * scale;
    if (!q.im.is_zero())
        throw std::domain_error("contour constant is not real for this spec");
    if (q.re.is_zero())
        throw std::domain_error("contour constant vanishes for this spec");
    return q.re;
}

std::map<long, ZRingElem> rhs_assembly(const IntegralSpec& spec) {
    require_spec(spec);
    const long a = spec.a, m = spec.m;
    const bool odd_m = (m % 2 == 1);
    const SumFamily family = (spec.sign == Sign::Plus)
                                 ? (odd_m ? SumFamily::Ctilde : SumFamily::Cprime)
                                 : (odd_m ? SumFamily::Sbar : SumFamily::S);
    // (-1)^(mn) makes odd m pick up the alternating family with a minus sign
    const long family_sign = odd_m ? -1 : 1;

    std::map<long, ZRingElem> rhs;
    for (long l = 0; 2 * l <= m - 1; ++l) {
        const long p_idx = a + 1 + 2 * l - m;
        const ZRingElem sum = family_sum(family, p_idx, m);
        const Rat gl = gamma_lm(l, m);
        for (long j = 0; j <= m - 1 - 2 * l; ++j) {
            const long kappa = m - 1 - 2 * l - j;
            Rat coeff = pow2(l) * gl * Rat(binomial(static_cast<unsigned long>(a),
                                                    static_cast<unsigned long>(j)),
                                           factorial(static_cast<unsigned long>(kappa)));
            if (l % 2 == 0) coeff = -coeff;  // (-1)^(l+1)
            coeff = coeff * Rat(family_sign);
            if (coeff.is_zero()) continue;
            const long pi_exp = a + 1 - j;
            ZRingElem piece = sum.ddy_n(kappa).scaled(RatFunX(coeff));
            auto it = rhs.find(pi_exp);
            if (it == rhs.end()) rhs.emplace(pi_exp, std::move(piece));
            else it->second = it->second + piece;
        }
    }
    return rhs;
}

QXYPoly berndt_eval(const IntegralSpec& spec) {
    const std::map<long, ZRingElem> rhs = rhs_assembly(spec);
    SpecialValue total;
    for (const auto& [pi_exp, elem] : rhs)
        total = total + elem.eval_at_half().pi_shifted(pi_exp);
    const Rat pf = prefactor(spec);
    return total.scaled(pf.inverse()).to_qxy();
}

StructureWindow structure_window(const IntegralSpec& spec) {
    require_spec(spec);
    StructureWindow w;
    const long m = spec.m;
    if (spec.sign == Sign::Plus) {
        const long p = (spec.a - 1) / 4;
        w.x_min = 2 * p - m + 2;
        w.x_max = 2 * p + m;
        w.x_parity = static_cast<int>(m % 2);
        w.y_min = 2 * p - m + 2;
        w.y_max = 2 * p + 3 * m - 2;
    } else {
        const long a = spec.a;
        w.x_min = (a + 3) / 2 - m;
        w.x_max = (a - 1) / 2 + m;
        w.x_parity = 0;
        w.y_min = (a + 3) / 2 - m;
        w.y_max = (a - 5) / 2 + 3 * m;
    }
    return w;
}

bool check_structure(const QXYPoly& poly, const IntegralSpec& spec) {
    const StructureWindow w = structure_window(spec);
    for (const auto& [key, c] : poly.terms()) {
        (void)c;
        if (!w.contains(key.first, key.second)) return false;
    }
    return true;
}

}  // namespace berndt
