#include "berndt/conjecture.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "berndt/lattice.hpp"
#include "berndt/latex_value.hpp"

namespace berndt {

std::optional<ConjectureId> conjecture_id_from(const std::string& name) {
    if (name == "plus-x1") return ConjectureId::PlusX1;
    if (name == "plus-x5") return ConjectureId::PlusX5;
    if (name == "x9m6") return ConjectureId::X9M6;
    return std::nullopt;
}

const char* conjecture_name(ConjectureId id) {
    switch (id) {
        case ConjectureId::PlusX1: return "plus-x1";
        case ConjectureId::PlusX5: return "plus-x5";
        case ConjectureId::X9M6: return "x9m6";
    }
    return "?";
}

namespace {

void add_deg(std::set<std::pair<long, long>>& out, long x, long y) {
    if (x >= 0 && y >= 0) out.insert({x, y});
}

}  // namespace

std::vector<std::pair<long, long>> conjecture_support(ConjectureId id, long m) {
    if (m < 1) throw std::domain_error("conjecture_support: need m >= 1");
    std::set<std::pair<long, long>> s;
    if (id == ConjectureId::PlusX1) {
        if (m % 2 == 1) {
            const long n = (m + 1) / 2;
            for (long j = 1; j <= n - 1; ++j) add_deg(s, 2 * j - 1, 6 * j - 4);
            for (long j = 1; j <= n; ++j) add_deg(s, 2 * j - 1, 6 * j - 5);
        } else {
            const long n = m / 2;
            add_deg(s, 0, 0);
            for (long j = 1; j <= n - 1; ++j) add_deg(s, 2 * j, 6 * j - 1);
            for (long j = 1; j <= n; ++j) add_deg(s, 2 * j, 6 * j - 2);
        }
    } else if (id == ConjectureId::PlusX5) {
        if (m % 2 == 1) {
            const long n = (m + 1) / 2;
            add_deg(s, 1, 1);
            add_deg(s, 1, 2);
            for (long j = 2; j <= n - 3; ++j)
                for (long i = 1; i <= 6; ++i) add_deg(s, 2 * j - 1, 6 * j - 10 + i);
            for (long j = 1; j <= 3; ++j)
                for (long i = 1; i <= 7 - 2 * j; ++i)
                    add_deg(s, 2 * j + 2 * n - 5, 6 * j + 6 * n - 22 + i);
        } else {
            const long n = m / 2;
            add_deg(s, 0, 0);
            for (long i = 1; i <= 4; ++i) add_deg(s, 2, i + 1);
            for (long i = 1; i <= 6; ++i)
                if (i != 2) add_deg(s, 4, i + 5);
            for (long j = 3; j <= n - 2; ++j)
                for (long i = 1; i <= 6; ++i) add_deg(s, 2 * j, 6 * j - 7 + i);
            for (long j = 1; j <= 3; ++j)
                for (long i = 1; i <= 7 - 2 * j; ++i)
                    add_deg(s, 2 * j + 2 * n - 4, 6 * j + 6 * n - 19 + i);
        }
    } else {
        throw std::domain_error("conjecture_support: x9m6 has a single closed constant");
    }
    return {s.begin(), s.end()};
}

namespace {

std::string degrees_str(long x, long y) {
    std::ostringstream os;
    os << "X^" << x << "Y^" << y;
    return os.str();
}

ConjectureCaseResult screen_case(ConjectureId id, long a, long m, long digits) {
    ConjectureCaseResult res;
    res.a = a;
    res.m = m;
    const auto support = conjecture_support(id, m);
    const std::set<std::pair<long, long>> sset(support.begin(), support.end());
    const IntegralSpec spec{a, m, Sign::Plus};

    if (spec_valid(spec)) {
        res.engine_exact = true;
        const QXYPoly poly = berndt_eval(spec);
        res.support_ok = true;
        std::ostringstream os;
        for (const auto& [deg, c] : poly.terms()) {
            (void)c;
            if (!sset.count({deg.first, deg.second})) {
                res.support_ok = false;
                os << degrees_str(deg.first, deg.second) << " falls outside the support; ";
            }
        }
        if (res.support_ok) {
            os << "exact value has " << poly.terms().size() << " monomials, all inside the "
               << support.size() << "-element support";
        }
        res.detail = os.str();
        return res;
    }

    // numeric screening: integer relation between the integral and the
    // support monomials, certified at raised precision
    const long work = std::max<long>(digits, 70);
    const BigFloat value = quad_berndt(a, m, Sign::Plus, work).value;
    std::vector<BigFloat> vals{value};
    std::vector<QXYPoly> monos;
    for (const auto& [x, y] : support) {
        QXYPoly mono;
        mono.add_term(Rat(1), static_cast<int>(x), static_cast<int>(y));
        monos.push_back(mono);
        vals.push_back(eval_qxy(mono, work));
    }

    const auto rel = integer_relation(vals, work - 15);
    if (!rel || (*rel)[0] == 0) {
        res.detail = "no integer relation involving the integral was found";
        return res;
    }
    Int lead_abs = (*rel)[0];
    mpz_abs(lead_abs.get_mpz_t(), lead_abs.get_mpz_t());
    Int huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);
    if (lead_abs > huge) {
        res.detail = "only an implausibly large relation was found";
        return res;
    }

    QXYPoly candidate;
    const Rat lead{(*rel)[0]};
    for (size_t i = 0; i < monos.size(); ++i) {
        const Rat q = -Rat((*rel)[i + 1]) / lead;
        if (q.is_zero()) continue;
        for (const auto& [deg, c] : monos[i].terms())
            candidate.add_term(q * c, deg.first, deg.second);
    }

    const long cert = work + 40;
    const BigFloat v2 = quad_berndt(a, m, Sign::Plus, cert).value;
    const BigFloat p2 = eval_qxy(candidate, cert);
    const BigFloat diff = bf_abs(v2 - p2);
    BigFloat scale = bf_abs(v2);
    if (scale < BigFloat::from_long(1, scale.prec())) scale = BigFloat::from_long(1, scale.prec());
    if (diff <= bf_pow10(-(work + 15), digit_bits(cert)) * scale) {
        res.support_ok = true;
        std::ostringstream os;
        os << "integral matches a rational combination of " << candidate.terms().size()
           << " support monomials (certified at " << cert << " digits): "
           << render_latex(candidate);
        res.detail = os.str();
    } else {
        res.detail = "the fitted combination failed re-certification at raised precision";
    }
    return res;
}

}  // namespace

ConjectureReport screen_structural(ConjectureId id, long n_max, long digits) {
    if (id == ConjectureId::X9M6)
        throw std::domain_error("x9m6 is checked by check_x9m6, not structural screening");
    if (n_max < 1 || n_max > 6) throw std::domain_error("structural screening: need 1 <= n_max <= 6");
    const long a = (id == ConjectureId::PlusX1) ? 1 : 5;
    ConjectureReport rep;
    for (long n = 1; n <= n_max; ++n) {
        for (long m : {2 * n - 1, 2 * n}) {
            rep.cases.push_back(screen_case(id, a, m, digits));
            if (!rep.cases.back().support_ok) rep.all_ok = false;
        }
    }
    return rep;
}

X9M6Result check_x9m6(long digits) {
    const long work = std::max<long>(digits, 60);
    X9M6Result res{BigFloat(digit_bits(work)), BigFloat(digit_bits(work)), 0};
    res.reference = eval_qxy(parse_latex(x9m6_reference_latex()), work);
    res.quadrature = quad_berndt(9, 6, Sign::Plus, work).value;
    const BigFloat diff = bf_abs(res.quadrature - res.reference);
    const double dd = diff.to_double();
    if (diff.is_zero() || dd == 0.0) {
        res.agreement_digits = work;
    } else {
        const double d = -std::log10(dd);
        res.agreement_digits = d <= 0 ? 0 : static_cast<long>(d);
    }
    return res;
}

}  // namespace berndt
