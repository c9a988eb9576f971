#include "berndt/triangles.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace berndt {

namespace {

// Term c * numer^e * denom^(-t) where (numer, denom) is (cosh, sinh) for the
// B/D families and (sinh, cosh) for the tilde families.  Keys are (e, t).
using Laurent = std::map<std::pair<int, int>, Rat>;

void laurent_add(Laurent& dst, int e, int t, const Rat& c, int numer_sq_offset) {
    // fold numer^2 = numer_sq_offset + denom^2 until e < 2
    if (e >= 2) {
        laurent_add(dst, e - 2, t, Rat(numer_sq_offset) * c, numer_sq_offset);
        laurent_add(dst, e - 2, t - 2, c, numer_sq_offset);
        return;
    }
    Rat& slot = dst[{e, t}];
    slot += c;
    if (slot.is_zero()) dst.erase({e, t});
}

// One derivative in the argument: d(numer^e) = e numer^(e-1) denom and
// d(denom^(-t)) = -t numer denom^(-t-1).
Laurent laurent_derivative(const Laurent& elem, int numer_sq_offset) {
    Laurent out;
    for (const auto& [key, c] : elem) {
        const auto [e, t] = key;
        if (e > 0) laurent_add(out, e - 1, t - 1, Rat(e) * c, numer_sq_offset);
        laurent_add(out, e + 1, t + 1, Rat(-t) * c, numer_sq_offset);
    }
    return out;
}

struct TriangleState {
    Laurent current;       // d^{2k}/dt^{2k} of denom^(-base) for k = rows built - 1
    CoeffTriangle result;  // rows built so far
};

std::mutex triangle_mutex;
std::map<TriangleKind, TriangleState> triangle_cache;

int triangle_base(TriangleKind kind) {
    return (kind == TriangleKind::B || kind == TriangleKind::Btilde) ? 1 : 2;
}

int triangle_numer_sq_offset(TriangleKind kind) {
    // cosh^2 = +1 + sinh^2 over sinh; sinh^2 = -1 + cosh^2 over cosh
    return (kind == TriangleKind::B || kind == TriangleKind::D) ? 1 : -1;
}

std::vector<Rat> read_row(const Laurent& elem, int base, long k) {
    std::vector<Rat> row(static_cast<size_t>(k) + 1, Rat(0));
    for (const auto& [key, c] : elem) {
        const auto [e, t] = key;
        if (e != 0) throw std::logic_error("triangle row with residual numerator power");
        const int l = (t - base) / 2;
        if ((t - base) % 2 != 0 || l < 0 || l > k)
            throw std::logic_error("triangle row outside expected support");
        row[static_cast<size_t>(l)] = c;
    }
    return row;
}

void append_inverse_row(CoeffTriangle& tri) {
    const size_t i = tri.inverse.size();
    const auto& L = tri.entries;
    std::vector<Rat> row(i + 1, Rat(0));
    row[i] = L[i][i].inverse();
    for (size_t j = 0; j < i; ++j) {
        Rat acc(0);
        for (size_t t = j; t < i; ++t) acc += L[i][t] * tri.inverse[t][j];
        row[j] = -acc / L[i][i];
    }
    tri.inverse.push_back(std::move(row));
}

}  // namespace

CoeffTriangle coeff_triangle(TriangleKind kind, long max_k) {
    if (max_k < 0) throw std::domain_error("coeff_triangle: max_k must be >= 0");
    std::lock_guard<std::mutex> lock(triangle_mutex);
    auto it = triangle_cache.find(kind);
    if (it == triangle_cache.end()) {
        TriangleState st;
        st.current[{0, triangle_base(kind)}] = Rat(1);
        st.result.kind = kind;
        st.result.entries.push_back({Rat(1)});
        st.result.inverse.push_back({Rat(1)});
        it = triangle_cache.emplace(kind, std::move(st)).first;
    }
    TriangleState& st = it->second;
    const int off = triangle_numer_sq_offset(kind);
    const int base = triangle_base(kind);
    for (long k = static_cast<long>(st.result.entries.size()); k <= max_k; ++k) {
        st.current = laurent_derivative(laurent_derivative(st.current, off), off);
        st.result.entries.push_back(read_row(st.current, base, k));
        append_inverse_row(st.result);
    }
    CoeffTriangle out;
    out.kind = kind;
    out.entries.assign(st.result.entries.begin(), st.result.entries.begin() + max_k + 1);
    out.inverse.assign(st.result.inverse.begin(), st.result.inverse.begin() + max_k + 1);
    return out;
}

const char* triangle_kind_name(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::B: return "B";
        case TriangleKind::D: return "D";
        case TriangleKind::Btilde: return "Btilde";
        case TriangleKind::Dtilde: return "Dtilde";
    }
    return "?";
}

}  // namespace berndt
