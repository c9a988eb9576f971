#include "berndt/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace berndt {

namespace {

BigFloat bf_one(mpfr_prec_t prec) { return BigFloat::from_long(1, prec); }

BigFloat bf_half_ulp(mpfr_prec_t prec, long extra) {
    BigFloat r = bf_one(prec);
    return bf_mul_2si(r, -(static_cast<long>(prec) - extra));
}

}  // namespace

BigFloat agm(const BigFloat& a0, const BigFloat& b0, mpfr_prec_t prec) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw std::domain_error("agm: arguments must be positive");
    const mpfr_prec_t wp = prec + 32;
    BigFloat a(wp), b(wp);
    mpfr_set(a.raw(), a0.raw(), MPFR_RNDN);
    mpfr_set(b.raw(), b0.raw(), MPFR_RNDN);
    const BigFloat tol = bf_half_ulp(wp, 8);
    for (int iter = 0; iter < 200; ++iter) {
        if (bf_abs(a - b) <= tol * bf_abs(a)) break;
        BigFloat am = bf_mul_2si(a + b, -1);
        BigFloat gm = bf_sqrt(a * b);
        a = std::move(am);
        b = std::move(gm);
    }
    BigFloat r(prec);
    mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat gamma_quarter(mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 32;
    const BigFloat pi = bf_pi(wp);
    const BigFloat two = BigFloat::from_long(2, wp);
    const BigFloat m = agm(bf_one(wp), bf_sqrt(two), wp);
    BigFloat val = bf_sqrt(two * bf_sqrt(two * pi) * pi / m);
    BigFloat r(prec);
    mpfr_set(r.raw(), val.raw(), MPFR_RNDN);
    return r;
}

EllipticKE elliptic_ke(const BigFloat& x, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 48;
    const BigFloat one = bf_one(wp);
    BigFloat xx(wp);
    mpfr_set(xx.raw(), x.raw(), MPFR_RNDN);
    if (xx.sign() <= 0 || xx >= one) throw std::domain_error("elliptic_ke: need 0 < x < 1");
    BigFloat a = one;
    BigFloat b = bf_sqrt(one - xx);
    // E/K = 1 - sum_{j>=0} 2^(j-1) c_j^2 with c_0 = k = sqrt(x)
    BigFloat csum = bf_mul_2si(xx, -1);
    const BigFloat tol = bf_half_ulp(wp, 8);
    long j = 0;
    while (bf_abs(a - b) > tol * a && j < 200) {
        BigFloat c = bf_mul_2si(a - b, -1);
        BigFloat am = bf_mul_2si(a + b, -1);
        BigFloat gm = bf_sqrt(a * b);
        a = std::move(am);
        b = std::move(gm);
        ++j;
        csum = csum + bf_mul_2si(c * c, j - 1);
    }
    EllipticKE out{BigFloat(prec), BigFloat(prec)};
    const BigFloat K = bf_pi(wp) / bf_mul_2si(a, 1);
    const BigFloat E = K * (one - csum);
    mpfr_set(out.K.raw(), K.raw(), MPFR_RNDN);
    mpfr_set(out.E.raw(), E.raw(), MPFR_RNDN);
    return out;
}

std::vector<BigFloat> z_jet_numeric(const BigFloat& x, long n, mpfr_prec_t prec) {
    if (n < 0) throw std::domain_error("z_jet_numeric: negative order");
    const mpfr_prec_t wp = prec + 48 + 8 * static_cast<mpfr_prec_t>(n);
    BigFloat x0(wp);
    mpfr_set(x0.raw(), x.raw(), MPFR_RNDN);
    const BigFloat one = bf_one(wp);
    if (x0.sign() <= 0 || x0 >= one) throw std::domain_error("z_jet_numeric: need 0 < x < 1");

    EllipticKE ke = elliptic_ke(x0, wp);
    const size_t sz = static_cast<size_t>(n) + 1;
    std::vector<BigFloat> K(sz, BigFloat(wp)), E(sz, BigFloat(wp));
    K[0] = ke.K;
    E[0] = ke.E;

    // Taylor jets around x0 of D = 2x(1-x) (degree 2) and X2 = 2x (degree 1)
    const BigFloat two = BigFloat::from_long(2, wp);
    const BigFloat D0 = two * x0 * (one - x0);
    const BigFloat D1 = two - two * two * x0;
    const BigFloat D2 = -two;
    const BigFloat X20 = two * x0;

    std::vector<BigFloat> Q(sz, BigFloat(wp)), Q2(sz, BigFloat(wp));
    for (long t = 0; t < n; ++t) {
        // Q = (E - (1-x)K) / D up to index t; (1-x) jet is (1-x0, -1)
        for (long i = 0; i <= t; ++i) {
            BigFloat Ai = E[i] - (one - x0) * K[i];
            if (i >= 1) Ai = Ai + K[i - 1];
            if (i >= 1) Ai = Ai - D1 * Q[i - 1];
            if (i >= 2) Ai = Ai - D2 * Q[i - 2];
            Q[i] = Ai / D0;
        }
        K[static_cast<size_t>(t) + 1] = Q[t] / BigFloat::from_long(t + 1, wp);
        // Q2 = (E - K) / (2x) up to index t; 2x jet is (2x0, 2)
        for (long i = 0; i <= t; ++i) {
            BigFloat Bi = E[i] - K[i];
            if (i >= 1) Bi = Bi - two * Q2[i - 1];
            Q2[i] = Bi / X20;
        }
        E[static_cast<size_t>(t) + 1] = Q2[t] / BigFloat::from_long(t + 1, wp);
    }

    const BigFloat two_over_pi = two / bf_pi(wp);
    std::vector<BigFloat> out;
    out.reserve(sz);
    BigFloat fact = one;
    for (long j = 0; j <= n; ++j) {
        if (j > 0) fact = fact * BigFloat::from_long(j, wp);
        BigFloat zj(prec);
        BigFloat val = two_over_pi * fact * K[static_cast<size_t>(j)];
        mpfr_set(zj.raw(), val.raw(), MPFR_RNDN);
        out.push_back(std::move(zj));
    }
    return out;
}

BigFloat y_of_x(const BigFloat& x, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 32;
    BigFloat xx(wp);
    mpfr_set(xx.raw(), x.raw(), MPFR_RNDN);
    const BigFloat one = bf_one(wp);
    if (xx.sign() <= 0 || xx >= one) throw std::domain_error("y_of_x: need 0 < x < 1");
    BigFloat val = bf_pi(wp) * agm(one, bf_sqrt(one - xx), wp) / agm(one, bf_sqrt(xx), wp);
    BigFloat r(prec);
    mpfr_set(r.raw(), val.raw(), MPFR_RNDN);
    return r;
}

BigFloat x_of_y(const BigFloat& y, mpfr_prec_t prec) {
    if (y.sign() <= 0) throw std::domain_error("x_of_y: need y > 0");
    const mpfr_prec_t wp = prec + 64;
    // bisection at low precision for a seed
    const mpfr_prec_t lp = 96;
    BigFloat lo = BigFloat::from_rat(Rat(1, 1000000), lp);
    BigFloat hi = BigFloat::from_rat(Rat(999999, 1000000), lp);
    BigFloat yl(lp);
    mpfr_set(yl.raw(), y.raw(), MPFR_RNDN);
    for (int i = 0; i < 60; ++i) {
        BigFloat mid = bf_mul_2si(lo + hi, -1);
        if (y_of_x(mid, lp) > yl) lo = mid;  // y decreasing in x
        else hi = mid;
    }
    BigFloat xw(wp);
    mpfr_set(xw.raw(), lo.raw(), MPFR_RNDN);
    const BigFloat one = bf_one(wp);
    BigFloat yw(wp);
    mpfr_set(yw.raw(), y.raw(), MPFR_RNDN);
    // Newton: x <- x + (y(x) - y) * x(1-x) z^2
    for (int i = 0; i < 64; ++i) {
        const BigFloat yy = y_of_x(xw, wp);
        // dy/dx = -1/(x(1-x) z^2) with z = 2K/pi = 1/agm(1, sqrt(1-x))
        const BigFloat zz = bf_one(wp) / agm(one, bf_sqrt(one - xw), wp);
        const BigFloat step = (yy - yw) * xw * (one - xw) * zz * zz;
        xw = xw + step;
        if (bf_abs(step) < bf_half_ulp(wp, 16) * bf_abs(xw)) break;
    }
    BigFloat r(prec);
    mpfr_set(r.raw(), xw.raw(), MPFR_RNDN);
    return r;
}

JacobiValues jacobi_numeric(const BigFloat& u, const BigFloat& x, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 48;
    const BigFloat one = bf_one(wp);
    BigFloat xx(wp), uu(wp);
    mpfr_set(xx.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(uu.raw(), u.raw(), MPFR_RNDN);
    if (xx.sign() <= 0 || xx >= one) throw std::domain_error("jacobi_numeric: need 0 < x < 1");

    std::vector<BigFloat> as, cs;
    BigFloat a = one, b = bf_sqrt(one - xx);
    const BigFloat tol = bf_half_ulp(wp, 8);
    while (true) {
        BigFloat c = bf_mul_2si(a - b, -1);
        as.push_back(a);
        cs.push_back(c);
        if (bf_abs(c) <= tol * a || as.size() > 200) break;
        BigFloat am = bf_mul_2si(a + b, -1);
        BigFloat gm = bf_sqrt(a * b);
        a = std::move(am);
        b = std::move(gm);
    }
    const long N = static_cast<long>(as.size()) - 1;
    BigFloat phi = bf_mul_2si(as.back() * uu, N);
    for (long i = N; i >= 1; --i) {
        const BigFloat arg = cs[static_cast<size_t>(i)] / as[static_cast<size_t>(i)] * bf_sin(phi);
        phi = bf_mul_2si(phi + bf_asin(arg), -1);
    }
    JacobiValues out{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
    const BigFloat sn = bf_sin(phi), cn = bf_cos(phi);
    const BigFloat dn = bf_sqrt(one - xx * sn * sn);
    mpfr_set(out.sn.raw(), sn.raw(), MPFR_RNDN);
    mpfr_set(out.cn.raw(), cn.raw(), MPFR_RNDN);
    mpfr_set(out.dn.raw(), dn.raw(), MPFR_RNDN);
    return out;
}

BigFloat sum_series(SumKind kind, long p, long m, const BigFloat& y, long digits) {
    if (m < 1) throw std::domain_error("sum_series: m must be >= 1");
    if (p < 0) throw std::domain_error("sum_series: p must be >= 0");
    if (y.sign() <= 0) throw std::domain_error("sum_series: y must be positive");
    const mpfr_prec_t wp = digit_bits(digits + 10);
    const bool alternating = (kind == SumKind::Sbar || kind == SumKind::Ctilde);
    const bool half_index = (kind == SumKind::Ctilde || kind == SumKind::Cprime);
    const bool use_cosh = half_index;

    BigFloat yy(wp);
    mpfr_set(yy.raw(), y.raw(), MPFR_RNDN);
    const BigFloat eps = bf_pow10(-(digits + 5), wp);
    const double yd = yy.to_double();
    const double q_half = std::exp(-0.5 * static_cast<double>(m) * yd);
    // past n_min the term ratio stays below exp(-m y / 2)
    const long n_min = std::max<long>(4, static_cast<long>(2.0 * p / (m * yd)) + 2);

    BigFloat acc(wp);
    for (long n = 1;; ++n) {
        BigFloat idx(wp);
        if (half_index) {
            mpfr_set_si(idx.raw(), 2 * n - 1, MPFR_RNDN);
            idx = bf_mul_2si(idx, -1);
        } else {
            mpfr_set_si(idx.raw(), n, MPFR_RNDN);
        }
        const BigFloat t = idx * yy;
        const BigFloat denom = use_cosh ? bf_cosh(t) : bf_sinh(t);
        BigFloat term = bf_pow_si(idx, p) / bf_pow_si(denom, m);
        if (alternating && n % 2 == 0) term = -term;
        acc = acc + term;
        if (n >= n_min) {
            // tail <= |term| * q/(1-q) with q <= q_half < 1
            const BigFloat bound = bf_abs(term) * BigFloat::from_double(q_half / (1.0 - q_half), wp);
            if (bound < eps) break;
        }
        if (n > 100000000) throw std::runtime_error("sum_series: failed to converge");
    }
    BigFloat r(digit_bits(digits));
    mpfr_set(r.raw(), acc.raw(), MPFR_RNDN);
    return r;
}

namespace {

// ---- Gauss-Legendre machinery ------------------------------------------

std::mutex gl_mutex;
std::map<std::pair<long, mpfr_prec_t>, std::pair<std::vector<BigFloat>, std::vector<BigFloat>>>
    gl_cache;

// Legendre P_n and P_n' at t by the three-term recurrence.
void legendre_pair(long n, const BigFloat& t, BigFloat& pn, BigFloat& dpn, mpfr_prec_t wp) {
    BigFloat p0 = bf_one(wp);
    BigFloat p1(wp);
    mpfr_set(p1.raw(), t.raw(), MPFR_RNDN);
    if (n == 0) {
        pn = p0;
        dpn = BigFloat(wp);
        return;
    }
    for (long k = 2; k <= n; ++k) {
        BigFloat pk = (BigFloat::from_long(2 * k - 1, wp) * t * p1 -
                       BigFloat::from_long(k - 1, wp) * p0) /
                      BigFloat::from_long(k, wp);
        p0 = std::move(p1);
        p1 = std::move(pk);
    }
    pn = p1;
    const BigFloat one = bf_one(wp);
    dpn = BigFloat::from_long(n, wp) * (t * p1 - p0) / (t * t - one);
}

// Nodes and weights on [-1, 1], cached per (order, precision).
const std::pair<std::vector<BigFloat>, std::vector<BigFloat>>& gl_rule(long n, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto it = gl_cache.find({n, prec});
    if (it != gl_cache.end()) return it->second;

    const mpfr_prec_t wp = prec + 32;
    std::vector<BigFloat> nodes, weights;
    nodes.reserve(static_cast<size_t>(n));
    weights.reserve(static_cast<size_t>(n));
    const BigFloat one = bf_one(wp);
    const BigFloat tol = bf_half_ulp(wp, 16);
    for (long i = 1; i <= n; ++i) {
        const double guess = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        BigFloat t = BigFloat::from_double(guess, wp);
        BigFloat pn(wp), dpn(wp);
        for (int iter = 0; iter < 100; ++iter) {
            legendre_pair(n, t, pn, dpn, wp);
            const BigFloat step = pn / dpn;
            t = t - step;
            if (bf_abs(step) < tol) break;
        }
        legendre_pair(n, t, pn, dpn, wp);
        BigFloat w = BigFloat::from_long(2, wp) / ((one - t * t) * dpn * dpn);
        BigFloat tn(prec), wn(prec);
        mpfr_set(tn.raw(), t.raw(), MPFR_RNDN);
        mpfr_set(wn.raw(), w.raw(), MPFR_RNDN);
        nodes.push_back(std::move(tn));
        weights.push_back(std::move(wn));
    }
    auto res = gl_cache.emplace(std::make_pair(n, prec),
                                std::make_pair(std::move(nodes), std::move(weights)));
    return res.first->second;
}

// cos x + cosh x = 2 sum x^(4k)/(4k)!; cos x - cosh x = -2 sum x^(4k+2)/(4k+2)!.
// All series terms carry one sign, so small-x evaluation loses no digits.
BigFloat denominator_base(const BigFloat& x, Sign sign, mpfr_prec_t wp) {
    double xd = std::fabs(x.to_double());
    if (xd < 0.125) {
        const BigFloat x4 = bf_pow_si(x, 4);
        BigFloat term(wp), acc(wp);
        if (sign == Sign::Plus) {
            term = BigFloat::from_long(2, wp);
        } else {
            term = -(x * x);
        }
        acc = term;
        const BigFloat tiny = bf_half_ulp(wp, 4);
        for (long k = 0; k < 1000; ++k) {
            const long b = (sign == Sign::Plus) ? 4 * k : 4 * k + 2;
            term = term * x4 /
                   BigFloat::from_long((b + 1) * (b + 2), wp) /
                   BigFloat::from_long((b + 3) * (b + 4), wp);
            acc = acc + term;
            if (bf_abs(term) < tiny * bf_abs(acc)) break;
        }
        return acc;
    }
    return sign == Sign::Plus ? bf_cos(x) + bf_cosh(x) : bf_cos(x) - bf_cosh(x);
}

BigFloat quad_integrand(const BigFloat& x, long a, long m, Sign sign, mpfr_prec_t wp) {
    const BigFloat den = denominator_base(x, sign, wp);
    return bf_pow_si(x, a) / bf_pow_si(den, m);
}

// exact bound on integral_T^inf x^a (cosh x - 1)^(-m) dx for T >= 2:
// (cosh x - 1)^(-m) <= 2^m e^(-mx) (1 - 2e^(-T))^(-m) and the remaining
// integral of x^a e^(-mx) has the closed form below.
BigFloat quad_tail_bound(long a, long m, const BigFloat& T, mpfr_prec_t wp) {
    const BigFloat one = bf_one(wp);
    const BigFloat emT = bf_exp(-(BigFloat::from_long(m, wp) * T));
    BigFloat poly(wp);
    BigFloat falling = one;  // a! / (a-k)!
    for (long k = 0; k <= a; ++k) {
        if (k > 0) falling = falling * BigFloat::from_long(a - k + 1, wp);
        poly = poly + falling * bf_pow_si(T, a - k) / bf_pow_si(BigFloat::from_long(m, wp), k + 1);
    }
    const BigFloat margin = bf_pow_si(one - bf_mul_2si(bf_exp(-T), 1), -m);
    return bf_mul_2si(emT * poly * margin, m);
}

}  // namespace

QuadratureReport quad_berndt(long a, long m, Sign sign, long digits) {
    if (a < 0 || m < 1) throw std::domain_error("quad_berndt: need a >= 0, m >= 1");
    if (sign == Sign::Minus && a < 2 * m)
        throw std::domain_error("quad_berndt: minus sign needs a >= 2m for integrability");
    if (digits < 5) digits = 5;

    // internal digits absorb the integrand magnitude ~ (a/m)^a e^(-a) 2^m
    double scale_log10 = 0.0;
    if (a > 0)
        scale_log10 = a * (std::log10(static_cast<double>(a) / m) - 0.43429448190325176) +
                      0.30103 * m;
    if (scale_log10 < 0) scale_log10 = 0;
    const long wd = digits + 25 + static_cast<long>(scale_log10) + 1;
    const mpfr_prec_t wp = digit_bits(wd);

    const BigFloat eps_tail = bf_pow10(-(digits + 5), wp);
    const BigFloat half_pi = bf_mul_2si(bf_pi(wp), -1);

    long J = 4;
    BigFloat tail(wp);
    for (;; ++J) {
        const BigFloat T = BigFloat::from_long(J, wp) * half_pi;
        tail = quad_tail_bound(a, m, T, wp);
        if (tail < eps_tail) break;
        if (J > 4000) throw std::runtime_error("quad_berndt: tail cut not found");
    }
    const BigFloat T = BigFloat::from_long(J, wp) * half_pi;

    const BigFloat panel_eps = eps_tail / BigFloat::from_long(J, wp);
    BigFloat total(wp);
    long max_order = 0;
    for (long j = 0; j < J; ++j) {
        const BigFloat lo = BigFloat::from_long(j, wp) * half_pi;
        const BigFloat mid = lo + bf_mul_2si(half_pi, -1);
        const BigFloat hw = bf_mul_2si(half_pi, -1);
        BigFloat prev(wp);
        bool have_prev = false;
        bool accepted = false;
        for (long order = 16; order <= 2048; order *= 2) {
            const auto& [nodes, weights] = gl_rule(order, wp);
            BigFloat acc(wp);
            for (size_t i = 0; i < nodes.size(); ++i) {
                const BigFloat xi = mid + hw * nodes[i];
                acc = acc + weights[i] * quad_integrand(xi, a, m, sign, wp);
            }
            acc = acc * hw;
            if (have_prev && bf_abs(acc - prev) <= panel_eps) {
                total = total + acc;
                if (order > max_order) max_order = order;
                accepted = true;
                break;
            }
            prev = std::move(acc);
            have_prev = true;
        }
        if (!accepted) throw std::runtime_error("quad_berndt: panel failed to converge");
    }

    QuadratureReport rep{BigFloat(digit_bits(digits + 10)), BigFloat(digit_bits(digits + 10)),
                         0.0, J, max_order};
    mpfr_set(rep.value.raw(), total.raw(), MPFR_RNDN);
    mpfr_set(rep.tail_bound.raw(), tail.raw(), MPFR_RNDN);
    rep.cut = T.to_double();
    return rep;
}

BigFloat eval_qxy(const QXYPoly& poly, long digits) {
    const mpfr_prec_t wp = digit_bits(digits + 10);
    const BigFloat G = gamma_quarter(wp);
    const BigFloat X = bf_pow_si(G, 4);
    const BigFloat Y = bf_one(wp) / bf_pi(wp);
    BigFloat acc(wp);
    for (const auto& [k, c] : poly.terms())
        acc = acc + BigFloat::from_rat(c, wp) * bf_pow_si(X, k.first) * bf_pow_si(Y, k.second);
    BigFloat r(digit_bits(digits));
    mpfr_set(r.raw(), acc.raw(), MPFR_RNDN);
    return r;
}

BigFloat eval_zring_numeric(const ZRingElem& elem, const BigFloat& x, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 48;
    BigFloat xx(wp);
    mpfr_set(xx.raw(), x.raw(), MPFR_RNDN);
    const BigFloat one = bf_one(wp);
    const std::vector<BigFloat> jets = z_jet_numeric(xx, elem.max_jet_order(), wp);
    const BigFloat v = bf_sqrt(xx * (one - xx));
    const BigFloat vp = (one - bf_mul_2si(xx, 1)) / bf_mul_2si(v, 1);
    BigFloat acc(wp);
    for (const auto& [key, coeff] : elem.terms()) {
        BigFloat t = coeff.eval(xx);
        if (key.ev) t = t * bf_pow_si(v, key.ev);
        if (key.evp) t = t * bf_pow_si(vp, key.evp);
        for (const auto& [j, e] : key.jets) t = t * bf_pow_si(jets[static_cast<size_t>(j)], e);
        acc = acc + t;
    }
    BigFloat r(prec);
    mpfr_set(r.raw(), acc.raw(), MPFR_RNDN);
    return r;
}

std::optional<Rat> rational_reconstruct(const BigFloat& v, const Int& den_bound,
                                        long accept_digits) {
    if (v.is_nan()) return std::nullopt;
    const Rat exact = v.to_exact_rat();
    const Rat tol(Int(1), [&] {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(accept_digits));
        return t;
    }());

    // continued-fraction convergents of exact
    Int num = exact.num(), den = exact.den();
    Int h0(0), h1(1), k0(1), k1(0);  // h1/k1 is the current convergent
    while (true) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Int h2 = q * h1 + h0;
        Int k2 = q * k1 + k0;
        if (k2 > den_bound) return std::nullopt;
        const Rat cand(h2, k2);
        if ((exact - cand).abs() <= tol) return cand;
        if (sgn(r) == 0) return std::nullopt;  // exact dyadic reached, no match
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        num = den;
        den = r;
    }
}

}  // namespace berndt
