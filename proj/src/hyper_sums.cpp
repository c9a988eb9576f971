#include "berndt/hyper_sums.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <utility>

#include "berndt/triangles.hpp"
#include "berndt/elliptic_series.hpp"
#include "json.hpp"

namespace berndt {

const char* family_name(SumFamily family) {
    switch (family) {
        case SumFamily::Sbar: return "sbar";
        case SumFamily::S: return "s2";
        case SumFamily::Ctilde: return "ctilde";
        case SumFamily::Cprime: return "cprime";
    }
    return "?";
}

SumKind family_sum_kind(SumFamily family) {
    switch (family) {
        case SumFamily::Sbar: return SumKind::Sbar;
        case SumFamily::S: return SumKind::S;
        case SumFamily::Ctilde: return SumKind::Ctilde;
        case SumFamily::Cprime: return SumKind::Cprime;
    }
    throw std::logic_error("family_sum_kind");
}

bool family_args_legal(SumFamily family, long p, long m) {
    if (m < 1 || p < 1) return false;
    const bool odd_pair = (p % 2 == 1) && (m % 2 == 1);
    const bool even_pair = (p % 2 == 0) && (m % 2 == 0);
    switch (family) {
        case SumFamily::Sbar: return odd_pair && p >= m + 2;
        case SumFamily::Ctilde: return odd_pair && p >= m;
        case SumFamily::S: return even_pair && p >= m;
        case SumFamily::Cprime: return even_pair && p >= m;
    }
    return false;
}

void require_family_args(SumFamily family, long p, long m) {
    if (family_args_legal(family, p, m)) return;
    std::ostringstream os;
    os << "illegal sum (" << family_name(family) << ", p=" << p << ", m=" << m << "): ";
    const bool odd_family = (family == SumFamily::Sbar || family == SumFamily::Ctilde);
    if (m < 1 || p < 1)
        os << "indices must be positive";
    else if (odd_family && (p % 2 == 0 || m % 2 == 0))
        os << "p and m must both be odd";
    else if (!odd_family && (p % 2 == 1 || m % 2 == 1))
        os << "p and m must both be even";
    else if (family == SumFamily::Sbar && p < m + 2)
        os << "need p >= m+2 (the index-1 sinh sum has no closed form here)";
    else
        os << "need p >= m";
    throw std::domain_error(os.str());
}

long AnsatzShape::dimension() const {
    long d = 0;
    for (const auto& t : templates) d += t.sigma_deg_bound + 1;
    return d;
}

// ---- exact bases --------------------------------------------------------

ZRingElem ctilde_base(long s) {
    if (s < 0) throw std::domain_error("ctilde_base: need s >= 0");
    Rat c = pow2(-(2 * s + 2));
    if (s % 2 == 1) c = -c;
    const PolyX p = p_poly(2 * s + 1);
    return (ZRingElem::zjet(0, static_cast<int>(2 * s + 2)) * ZRingElem::v())
        .scaled(RatFunX(c * p));
}

ZRingElem cprime_base(long s) {
    if (s < 1) throw std::domain_error("cprime_base: need s >= 1");
    Rat c = pow2(-(2 * s + 1)) / Rat(s);
    if (s % 2 == 1) c = -c;
    const PolyX q = q_poly(2 * s);
    const PolyX qd = q.derivative();
    const PolyX sig = PolyX::sigma();
    ZRingElem inner = ZRingElem::zjet(0).scaled(RatFunX(sig * qd)) +
                      ZRingElem::zjet(1).scaled(RatFunX(Rat(2 * s) * sig * q));
    return (ZRingElem::zjet(0, static_cast<int>(2 * s + 1)) * inner).scaled(RatFunX(c));
}

// ---- ansatz shapes ------------------------------------------------------

namespace {

int start_degree(long s) { return static_cast<int>(s / 2) + 1; }

}  // namespace

AnsatzShape sbar_shape(long s, int extra_deg) {
    if (s < 1) throw std::domain_error("sbar_shape: need s >= 1");
    const int deg = start_degree(s) + extra_deg;
    MonomialTemplate t;
    t.z_exp = static_cast<int>(2 * s + 2);
    t.sigma_deg_bound = deg;
    t.sigma_prime = (s % 2 == 0);  // present iff 2s+2 = 2 (mod 4)
    return AnsatzShape{{t}};
}

AnsatzShape s2_shape(long s, int extra_deg) {
    if (s < 1) throw std::domain_error("s2_shape: need s >= 1");
    const int deg = start_degree(s) + extra_deg;
    const int ze = static_cast<int>(2 * s + 2);
    AnsatzShape shape;
    if (s == 1) {
        // z^4 Q[sigma] + z^3 z' Q[sigma] sigma' + z^2 (z')^2 Q[sigma]
        shape.templates.push_back({4, {}, deg, false, false});
        shape.templates.push_back({3, {{1, 1}}, deg, true, false});
        shape.templates.push_back({2, {{1, 2}}, deg, false, false});
    } else if (s % 2 == 1) {
        // 2s = 2 (mod 4): z^(2s+2) Q[sigma] + z^(2s+1) z' Q[sigma] sigma'
        shape.templates.push_back({ze, {}, deg, false, false});
        shape.templates.push_back({ze - 1, {{1, 1}}, deg, true, false});
    } else {
        // 2s = 0 (mod 4): z^(2s+2) Q[sigma] sigma' + z^(2s+1) z' Q[sigma]
        shape.templates.push_back({ze, {}, deg, true, false});
        shape.templates.push_back({ze - 1, {{1, 1}}, deg, false, false});
    }
    return shape;
}

// ---- fitting ------------------------------------------------------------

namespace {

PolyX poly_pow(const PolyX& p, int e) {
    PolyX r{Rat(1)};
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

std::vector<ZRingElem> build_basis(const AnsatzShape& shape) {
    std::vector<ZRingElem> basis;
    for (const auto& t : shape.templates) {
        ZRingElem core = ZRingElem::zjet(0, t.z_exp);
        for (const auto& [j, e] : t.jet_pattern) core = core * ZRingElem::zjet(j, e);
        if (t.v_factor) core = core * ZRingElem::v();
        for (int d = 0; d <= t.sigma_deg_bound; ++d) {
            PolyX c = poly_pow(PolyX::sigma(), d);
            if (t.sigma_prime) c = c * PolyX::sigma_prime();
            basis.push_back(core.scaled(RatFunX(c)));
        }
    }
    return basis;
}

std::vector<Rat> sample_points(long need) {
    std::vector<Rat> pts;
    for (long k = 4; k <= 28; ++k) {
        if (k == 16) continue;
        pts.push_back(Rat(k, 32));
    }
    for (long den = 64; static_cast<long>(pts.size()) < need && den <= (1L << 24); den *= 2) {
        for (long k = 1; k < den && static_cast<long>(pts.size()) < need; k += 2) {
            const Rat x(k, den);
            if (x <= Rat(1, 10) || x >= Rat(9, 10)) continue;
            if (den == 128 && (k == 37 || k == 71 || k == 101)) continue;  // held out
            pts.push_back(x);
        }
    }
    return pts;
}

BigFloat series_at(SumKind kind, long p, long m, const Rat& x, long digits) {
    const mpfr_prec_t wp = digit_bits(digits);
    const BigFloat xb = BigFloat::from_rat(x, wp);
    return sum_series(kind, p, m, y_of_x(xb, wp), digits);
}

ZRingElem fit_once(const std::vector<ZRingElem>& basis, const std::vector<Rat>& pts,
                   SumKind kind, long p, long m, long digits) {
    const long dim = static_cast<long>(basis.size());
    const mpfr_prec_t wp = digit_bits(digits);

    std::vector<std::vector<BigFloat>> A;
    std::vector<BigFloat> b;
    A.reserve(static_cast<size_t>(dim));
    for (long i = 0; i < dim; ++i) {
        const BigFloat xb = BigFloat::from_rat(pts[static_cast<size_t>(i)], wp);
        std::vector<BigFloat> row;
        row.reserve(static_cast<size_t>(dim));
        for (long j = 0; j < dim; ++j)
            row.push_back(eval_zring_numeric(basis[static_cast<size_t>(j)], xb, wp));
        A.push_back(std::move(row));
        b.push_back(series_at(kind, p, m, pts[static_cast<size_t>(i)], digits));
    }

    // Gaussian elimination with partial pivoting
    const BigFloat pivot_floor = bf_pow10(-(digits / 2), wp);
    for (long c = 0; c < dim; ++c) {
        long best = c;
        for (long r = c + 1; r < dim; ++r)
            if (bf_abs(A[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
                bf_abs(A[static_cast<size_t>(best)][static_cast<size_t>(c)]))
                best = r;
        if (best != c) {
            std::swap(A[static_cast<size_t>(best)], A[static_cast<size_t>(c)]);
            std::swap(b[static_cast<size_t>(best)], b[static_cast<size_t>(c)]);
        }
        const BigFloat& piv = A[static_cast<size_t>(c)][static_cast<size_t>(c)];
        if (bf_abs(piv) < pivot_floor) throw FitError("singular sample system");
        for (long r = c + 1; r < dim; ++r) {
            const BigFloat f = A[static_cast<size_t>(r)][static_cast<size_t>(c)] / piv;
            if (f.is_zero()) continue;
            for (long j = c; j < dim; ++j)
                A[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    A[static_cast<size_t>(r)][static_cast<size_t>(j)] -
                    f * A[static_cast<size_t>(c)][static_cast<size_t>(j)];
            b[static_cast<size_t>(r)] = b[static_cast<size_t>(r)] - f * b[static_cast<size_t>(c)];
        }
    }
    std::vector<BigFloat> sol(static_cast<size_t>(dim), BigFloat(wp));
    for (long r = dim - 1; r >= 0; --r) {
        BigFloat acc = b[static_cast<size_t>(r)];
        for (long j = r + 1; j < dim; ++j)
            acc = acc - A[static_cast<size_t>(r)][static_cast<size_t>(j)] * sol[static_cast<size_t>(j)];
        sol[static_cast<size_t>(r)] = acc / A[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }

    Int den_bound;
    mpz_ui_pow_ui(den_bound.get_mpz_t(), 10, 30);
    ZRingElem elem;
    for (long j = 0; j < dim; ++j) {
        const auto rec = rational_reconstruct(sol[static_cast<size_t>(j)], den_bound, 80);
        if (!rec) throw FitError("coefficient did not reconstruct as a small rational");
        if (rec->is_zero()) continue;
        elem = elem + basis[static_cast<size_t>(j)].scaled(RatFunX(*rec));
    }

    // certification at held-out points plus unused samples
    const long cert_digits = 110;
    const mpfr_prec_t cwp = digit_bits(cert_digits);
    std::vector<Rat> cert_pts = {Rat(37, 128), Rat(71, 128), Rat(101, 128)};
    for (long i = dim; i < dim + 5 && i < static_cast<long>(pts.size()); ++i)
        cert_pts.push_back(pts[static_cast<size_t>(i)]);
    const BigFloat tol = bf_pow10(-80, cwp);
    for (const Rat& xq : cert_pts) {
        const BigFloat xb = BigFloat::from_rat(xq, cwp);
        const BigFloat want = series_at(kind, p, m, xq, cert_digits);
        const BigFloat got = eval_zring_numeric(elem, xb, cwp);
        BigFloat scale = bf_abs(want);
        if (scale < BigFloat::from_long(1, cwp)) scale = BigFloat::from_long(1, cwp);
        if (bf_abs(got - want) > tol * scale)
            throw FitError("certification failed at a held-out point");
    }
    return elem;
}

}  // namespace

ZRingElem fit_ansatz(const AnsatzShape& shape, SumKind kind, long p, long m) {
    const long dim = shape.dimension();
    if (dim < 1 || dim > 64) throw FitError("ansatz dimension out of range");
    const std::vector<ZRingElem> basis = build_basis(shape);
    const std::vector<Rat> pts = sample_points(2 * dim + 3);
    std::string last;
    for (long digits : {160L, 320L, 640L}) {
        try {
            return fit_once(basis, pts, kind, p, m, digits);
        } catch (const FitError& e) {
            last = e.what();
        }
    }
    std::ostringstream os;
    os << "ansatz fit failed for (p=" << p << ", m=" << m << "): " << last;
    throw FitError(os.str());
}

// ---- fitted bases with cache + fixture store ----------------------------

namespace {

std::mutex fitted_mutex;
std::map<std::pair<int, long>, ZRingElem> fitted_cache;
std::string fitted_write_path;

constexpr const char* kFixtureSchema = "berndt-forge/fitted-bases/1";

nlohmann::json poly_to_json(const PolyX& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

PolyX poly_from_json(const nlohmann::json& arr) {
    std::vector<Rat> cs;
    for (const auto& s : arr) {
        auto r = Rat::from_string(s.get<std::string>());
        if (!r) throw FitError("bad rational in fixture: " + s.get<std::string>());
        cs.push_back(*r);
    }
    return PolyX(cs);
}

nlohmann::json elem_to_json(const ZRingElem& elem) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : elem.terms()) {
        nlohmann::json t;
        t["v"] = key.ev;
        t["vp"] = key.evp;
        nlohmann::json jets = nlohmann::json::array();
        for (const auto& [j, e] : key.jets) jets.push_back({j, e});
        t["jets"] = jets;
        t["num"] = poly_to_json(coeff.num());
        t["den"] = poly_to_json(coeff.den());
        terms.push_back(std::move(t));
    }
    return terms;
}

ZRingElem elem_from_json(const nlohmann::json& terms) {
    ZRingElem elem;
    for (const auto& t : terms) {
        ZRingElem piece = ZRingElem::coefficient(
            RatFunX(poly_from_json(t.at("num")), poly_from_json(t.at("den"))));
        for (int i = 0; i < t.at("v").get<int>(); ++i) piece = piece * ZRingElem::v();
        for (int i = 0; i < t.at("vp").get<int>(); ++i) piece = piece * ZRingElem::vprime();
        for (const auto& je : t.at("jets"))
            piece = piece * ZRingElem::zjet(je.at(0).get<int>(), je.at(1).get<int>());
        elem = elem + piece;
    }
    return elem;
}

struct FittedMeta {
    SumFamily family;
    long p, m;
};

FittedMeta fitted_meta(int family_tag, long s) {
    if (family_tag == static_cast<int>(SumFamily::Sbar)) return {SumFamily::Sbar, 2 * s + 1, 1};
    return {SumFamily::S, 2 * s, 2};
}

void write_store_locked() {
    if (fitted_write_path.empty()) return;
    nlohmann::json root;
    root["schema"] = kFixtureSchema;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, elem] : fitted_cache) {
        const FittedMeta meta = fitted_meta(key.first, key.second);
        nlohmann::json e;
        e["family"] = family_name(meta.family);
        e["s"] = key.second;
        e["sum_index"] = meta.p;
        e["terms"] = elem_to_json(elem);
        entries.push_back(std::move(e));
    }
    root["entries"] = std::move(entries);
    std::ofstream out(fitted_write_path);
    out << root.dump(1) << "\n";
}

ZRingElem fitted_base(SumFamily family, long s) {
    if (s < 1) throw std::domain_error("fitted base: need s >= 1");
    const std::pair<int, long> key{static_cast<int>(family), s};
    std::lock_guard<std::mutex> lock(fitted_mutex);
    auto it = fitted_cache.find(key);
    if (it != fitted_cache.end()) return it->second;

    const bool is_sbar = (family == SumFamily::Sbar);
    std::string last;
    for (int extra = 0; extra <= 4; ++extra) {
        try {
            AnsatzShape shape = is_sbar ? sbar_shape(s, extra) : s2_shape(s, extra);
            ZRingElem elem = is_sbar ? fit_ansatz(shape, SumKind::Sbar, 2 * s + 1, 1)
                                     : fit_ansatz(shape, SumKind::S, 2 * s, 2);
            fitted_cache.emplace(key, elem);
            write_store_locked();
            return elem;
        } catch (const FitError& e) {
            last = e.what();
        }
    }
    std::ostringstream os;
    os << family_name(family) << " base s=" << s << " did not certify: " << last;
    throw FitError(os.str());
}

}  // namespace

ZRingElem sbar_base(long s) { return fitted_base(SumFamily::Sbar, s); }
ZRingElem s2_base(long s) { return fitted_base(SumFamily::S, s); }

long load_fitted_bases(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FitError("cannot open fixture store: " + path);
    nlohmann::json root;
    try {
        in >> root;
    } catch (const std::exception& e) {
        throw FitError("fixture store " + path + " is not valid JSON: " + e.what());
    }
    if (root.value("schema", "") != kFixtureSchema)
        throw FitError("fixture store " + path + " has wrong schema");

    long count = 0;
    for (const auto& entry : root.at("entries")) {
        const std::string fam = entry.at("family").get<std::string>();
        const long s = entry.at("s").get<long>();
        std::ostringstream id;
        id << "fixture " << fam << " s=" << s;
        SumFamily family;
        if (fam == "sbar") family = SumFamily::Sbar;
        else if (fam == "s2") family = SumFamily::S;
        else throw FitError(id.str() + ": unknown family");
        if (s < 1) throw FitError(id.str() + ": bad index");

        ZRingElem elem;
        try {
            elem = elem_from_json(entry.at("terms"));
        } catch (const std::exception& e) {
            throw FitError(id.str() + ": " + e.what());
        }

        // cheap re-certification before the entry may enter the cache
        const FittedMeta meta = fitted_meta(static_cast<int>(family), s);
        const long digits = 50;
        const mpfr_prec_t wp = digit_bits(digits);
        const Rat xq(37, 128);
        const BigFloat want = series_at(family_sum_kind(meta.family), meta.p, meta.m, xq, digits);
        const BigFloat got = eval_zring_numeric(elem, BigFloat::from_rat(xq, wp), wp);
        BigFloat scale = bf_abs(want);
        if (scale < BigFloat::from_long(1, wp)) scale = BigFloat::from_long(1, wp);
        if (bf_abs(got - want) > bf_pow10(-30, wp) * scale)
            throw FitError(id.str() + ": failed re-certification against direct summation");

        std::lock_guard<std::mutex> lock(fitted_mutex);
        fitted_cache.insert_or_assign({static_cast<int>(family), s}, std::move(elem));
        ++count;
    }
    return count;
}

void save_fitted_bases(const std::string& path) {
    std::lock_guard<std::mutex> lock(fitted_mutex);
    const std::string keep = fitted_write_path;
    fitted_write_path = path;
    write_store_locked();
    fitted_write_path = keep;
}

void set_fitted_write_through(const std::string& path) {
    std::lock_guard<std::mutex> lock(fitted_mutex);
    fitted_write_path = path;
}

void clear_fitted_bases() {
    std::lock_guard<std::mutex> lock(fitted_mutex);
    fitted_cache.clear();
}

// ---- reduction ----------------------------------------------------------

std::vector<ReductionTerm> reduce_power(SumFamily family, long p, long m) {
    require_family_args(family, p, m);
    const long k = (m % 2 == 1) ? (m - 1) / 2 : (m - 2) / 2;
    TriangleKind tk;
    switch (family) {
        case SumFamily::Sbar: tk = TriangleKind::B; break;
        case SumFamily::Ctilde: tk = TriangleKind::Btilde; break;
        case SumFamily::S: tk = TriangleKind::D; break;
        case SumFamily::Cprime: tk = TriangleKind::Dtilde; break;
        default: throw std::logic_error("reduce_power");
    }
    const CoeffTriangle tri = coeff_triangle(tk, k);
    const auto& row = tri.inverse[static_cast<size_t>(k)];
    std::vector<ReductionTerm> out;
    out.reserve(static_cast<size_t>(k) + 1);
    for (long j = 0; j <= k; ++j)
        out.push_back({2 * j, p - 2 * j, row[static_cast<size_t>(j)]});
    return out;
}

ZRingElem family_base(SumFamily family, long index) {
    switch (family) {
        case SumFamily::Sbar:
            if (index < 3 || index % 2 == 0) throw std::domain_error("sbar base index must be odd >= 3");
            return sbar_base((index - 1) / 2);
        case SumFamily::Ctilde:
            if (index < 1 || index % 2 == 0) throw std::domain_error("ctilde base index must be odd >= 1");
            return ctilde_base((index - 1) / 2);
        case SumFamily::S:
            if (index < 2 || index % 2 == 1) throw std::domain_error("s2 base index must be even >= 2");
            return s2_base(index / 2);
        case SumFamily::Cprime:
            if (index < 2 || index % 2 == 1) throw std::domain_error("cprime base index must be even >= 2");
            return cprime_base(index / 2);
    }
    throw std::logic_error("family_base");
}

ZRingElem family_sum(SumFamily family, long p, long m) {
    ZRingElem acc;
    for (const ReductionTerm& t : reduce_power(family, p, m))
        acc = acc + family_base(family, t.base_index).ddy_n(t.deriv_order).scaled(RatFunX(t.coeff));
    return acc;
}

}  // namespace berndt
