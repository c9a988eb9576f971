#include "berndt/elliptic_series.hpp"

#include <mutex>
#include <stdexcept>

namespace berndt {

const PolyX& XPowerSeries::coeff(size_t i) const {
    static const PolyX zero;
    return i < c_.size() ? c_[i] : zero;
}

XPowerSeries XPowerSeries::truncated(long new_order) const {
    if (new_order > order_) throw std::domain_error("XPowerSeries: cannot extend by truncation");
    std::vector<PolyX> v(c_.begin(), c_.begin() + new_order + 1);
    return XPowerSeries(std::move(v), new_order);
}

XPowerSeries operator*(const XPowerSeries& a, const XPowerSeries& b) {
    const long order = std::min(a.order_, b.order_);
    std::vector<PolyX> v(static_cast<size_t>(order) + 1);
    for (long i = 0; i <= order; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; i + j <= order; ++j)
            v[static_cast<size_t>(i + j)] +=
                a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return XPowerSeries(std::move(v), order);
}

XPowerSeries XPowerSeries::reciprocal() const {
    if (order_ < 0 || !(c_[0] == PolyX(Rat(1))))
        throw std::domain_error("XPowerSeries: reciprocal needs constant coefficient 1");
    std::vector<PolyX> r(static_cast<size_t>(order_) + 1);
    r[0] = PolyX(Rat(1));
    for (long t = 1; t <= order_; ++t) {
        PolyX acc;
        for (long i = 0; i < t; ++i)
            acc += r[static_cast<size_t>(i)] * c_[static_cast<size_t>(t - i)];
        r[static_cast<size_t>(t)] = -acc;
    }
    return XPowerSeries(std::move(r), order_);
}

namespace {

std::mutex jacobi_mutex;
JacobiSeries jacobi_cache;
long jacobi_cache_order = -1;

// Incremental coefficient of (a*b) at exponent t when coefficients of a and b
// are known up to t.
PolyX product_coeff(const std::vector<PolyX>& a, const std::vector<PolyX>& b, long t) {
    PolyX acc;
    for (long i = 0; i <= t; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(t - i)];
    }
    return acc;
}

void build_jacobi(long order) {
    std::vector<PolyX> sn(static_cast<size_t>(order) + 1), cn(sn), dn(sn);
    sn[0] = PolyX();
    cn[0] = PolyX(Rat(1));
    dn[0] = PolyX(Rat(1));
    const PolyX x = PolyX::monomial(Rat(1), 1);
    for (long t = 0; t < order; ++t) {
        const Rat inv(1, t + 1);
        sn[static_cast<size_t>(t) + 1] = inv * product_coeff(cn, dn, t);
        cn[static_cast<size_t>(t) + 1] = -inv * product_coeff(sn, dn, t);
        dn[static_cast<size_t>(t) + 1] = -inv * (x * product_coeff(sn, cn, t));
    }
    jacobi_cache.sn = XPowerSeries(std::move(sn), order);
    jacobi_cache.cn = XPowerSeries(std::move(cn), order);
    jacobi_cache.dn = XPowerSeries(std::move(dn), order);
    jacobi_cache_order = order;
}

}  // namespace

JacobiSeries sn_cn_dn(long order) {
    if (order < 0) throw std::domain_error("sn_cn_dn: order must be >= 0");
    std::lock_guard<std::mutex> lock(jacobi_mutex);
    if (order > jacobi_cache_order) build_jacobi(order);
    if (order == jacobi_cache_order) return jacobi_cache;
    return JacobiSeries{jacobi_cache.sn.truncated(order), jacobi_cache.cn.truncated(order),
                        jacobi_cache.dn.truncated(order)};
}

PolyX p_poly(long n) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("p_poly: index must be odd and >= 1");
    const long order = 2 * n + 4;
    JacobiSeries js = sn_cn_dn(order);
    const XPowerSeries sd = js.sn * js.dn.reciprocal();
    return Rat(factorial(static_cast<unsigned long>(n))) * sd.coeff(static_cast<size_t>(n));
}

PolyX q_poly(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("q_poly: index must be even and >= 0");
    const long order = 2 * n + 4;
    JacobiSeries js = sn_cn_dn(order + 1);
    // sn/u is a unit series; u dn/sn = dn * (sn/u)^-1
    std::vector<PolyX> s1(static_cast<size_t>(order) + 1);
    for (long i = 0; i <= order; ++i) s1[static_cast<size_t>(i)] = js.sn.coeff(static_cast<size_t>(i) + 1);
    const XPowerSeries qs =
        js.dn.truncated(order) * XPowerSeries(std::move(s1), order).reciprocal();
    return Rat(factorial(static_cast<unsigned long>(n))) * qs.coeff(static_cast<size_t>(n));
}

std::vector<PolyX> sn_sq_coeffs(long order) {
    if (order < 0) throw std::domain_error("sn_sq_coeffs: order must be >= 0");
    JacobiSeries js = sn_cn_dn(order);
    const XPowerSeries sq = js.sn * js.sn;
    return sq.coeffs();
}

}  // namespace berndt
