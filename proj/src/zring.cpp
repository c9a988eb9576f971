#include "berndt/zring.hpp"

#include <sstream>

namespace berndt {

namespace {

RatFunX sigma_fun() { return RatFunX(PolyX::sigma()); }

// (1-4s)/(4s) = (1-2x)^2 / (4x(1-x))
RatFunX vprime_sq_fun() {
    return RatFunX(PolyX(std::vector<Rat>{Rat(1), Rat(-4), Rat(4)}),
                   PolyX(std::vector<Rat>{Rat(0), Rat(4), Rat(-4)}));
}

RatFunX v_vprime_fun() { return RatFunX(Rat(1, 2) * PolyX::sigma_prime()); }

// v'' = -v / (4 s^2): multiplier applied when one v' is differentiated
RatFunX vprime_deriv_fun() {
    const PolyX s = PolyX::sigma();
    return RatFunX(PolyX(Rat(-1, 4)), s * s);
}

// Fold ev/evp down to the reduced range {0,1} with ev*evp = 0.
void normalize(ZMonoKey& key, RatFunX& coeff) {
    while (key.ev >= 2) {
        key.ev -= 2;
        coeff *= sigma_fun();
    }
    while (key.evp >= 2) {
        key.evp -= 2;
        coeff *= vprime_sq_fun();
    }
    while (key.ev >= 1 && key.evp >= 1) {
        key.ev -= 1;
        key.evp -= 1;
        coeff *= v_vprime_fun();
    }
}

}  // namespace

void QXYPoly::add_term(const Rat& c, int deg_x, int deg_y) {
    if (c.is_zero()) return;
    if (deg_x < 0) throw StructuralError("QXYPoly: negative X degree");
    Rat& slot = terms_[{deg_x, deg_y}];
    slot += c;
    if (slot.is_zero()) terms_.erase({deg_x, deg_y});
}

QXYPoly operator+(const QXYPoly& a, const QXYPoly& b) {
    QXYPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(c, k.first, k.second);
    return r;
}

QXYPoly operator-(const QXYPoly& a, const QXYPoly& b) {
    QXYPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(-c, k.first, k.second);
    return r;
}

std::string QXYPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        os << "(" << c.abs().str() << ")";
        if (k.first != 0) {
            os << " X";
            if (k.first != 1) os << "^" << k.first;
        }
        if (k.second != 0) {
            os << " Y";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

SpecialValue SpecialValue::term(const Rat& c, int g_exp, int two_pi_exp) {
    SpecialValue s;
    if (!c.is_zero()) s.terms_[{g_exp, two_pi_exp}] = c;
    return s;
}

SpecialValue operator+(const SpecialValue& a, const SpecialValue& b) {
    SpecialValue r = a;
    for (const auto& [k, c] : b.terms_) {
        Rat& slot = r.terms_[k];
        slot += c;
        if (slot.is_zero()) r.terms_.erase(k);
    }
    return r;
}

SpecialValue operator*(const SpecialValue& a, const SpecialValue& b) {
    SpecialValue r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            Rat& slot = r.terms_[k];
            slot += ca * cb;
            if (slot.is_zero()) r.terms_.erase(k);
        }
    return r;
}

SpecialValue SpecialValue::scaled(const Rat& c) const {
    SpecialValue r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

SpecialValue SpecialValue::pi_shifted(int k) const {
    SpecialValue r;
    for (const auto& [key, v] : terms_) r.terms_[{key.first, key.second + 2 * k}] = v;
    return r;
}

SpecialValue SpecialValue::pow(int e) const {
    if (e < 0) throw std::domain_error("SpecialValue: negative power");
    SpecialValue r = SpecialValue::term(Rat(1), 0, 0);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

QXYPoly SpecialValue::to_qxy(int pi_shift) const {
    QXYPoly out;
    for (const auto& [key, c] : terms_) {
        const int g = key.first;
        const int tp = key.second + 2 * pi_shift;
        if (g % 4 != 0)
            throw StructuralError("to_qxy: Gamma exponent " + std::to_string(g) +
                                  " is not a multiple of 4");
        if (tp % 2 != 0)
            throw StructuralError("to_qxy: half-integer pi exponent " + std::to_string(tp) +
                                  "/2 survives");
        out.add_term(c, g / 4, -tp / 2);
    }
    return out;
}

std::string SpecialValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first != 0) os << " G^" << k.first;
        if (k.second != 0) os << " pi^(" << k.second << "/2)";
    }
    return os.str();
}

SpecialValue zjet_at_half(long n) {
    if (n < 0) throw std::domain_error("zjet_at_half: negative order");
    // ((1/2)_n)^2 sqrt(pi) / Gamma^2(n/2 + 3/4)
    Rat poch(1);
    for (long i = 0; i < n; ++i) poch *= Rat(2 * i + 1, 2);
    const Rat poch_sq = poch * poch;
    if (n % 2 == 0) {
        // Gamma(n/2+3/4) = Gamma(3/4) prod(3/4 + i), Gamma^2(3/4) = 2 pi^2 / Gamma^2(1/4)
        Rat c(1);
        for (long i = 0; i < n / 2; ++i) c *= Rat(4 * i + 3, 4);
        return SpecialValue::term(poch_sq / (Rat(2) * c * c), 2, -3);
    }
    // Gamma(n/2+3/4) = (1/4) Gamma(1/4) prod(5/4 + i)
    Rat c(1);
    for (long i = 0; i < (n - 1) / 2; ++i) c *= Rat(4 * i + 5, 4);
    return SpecialValue::term(Rat(16) * poch_sq / (c * c), -2, 1);
}

ZRingElem ZRingElem::coefficient(const RatFunX& c) {
    ZRingElem e;
    e.add_term(ZMonoKey{}, c);
    return e;
}

ZRingElem ZRingElem::v() {
    ZRingElem e;
    e.add_term(ZMonoKey{1, 0, {}}, RatFunX(Rat(1)));
    return e;
}

ZRingElem ZRingElem::vprime() {
    ZRingElem e;
    e.add_term(ZMonoKey{0, 1, {}}, RatFunX(Rat(1)));
    return e;
}

ZRingElem ZRingElem::zjet(int order, int exponent) {
    if (order < 0 || exponent < 0) throw std::domain_error("ZRingElem::zjet: bad arguments");
    ZMonoKey key;
    if (exponent > 0) key.jets[order] = exponent;
    ZRingElem e;
    e.add_term(std::move(key), RatFunX(Rat(1)));
    return e;
}

int ZRingElem::max_jet_order() const {
    int m = 0;
    for (const auto& [k, c] : terms_)
        if (!k.jets.empty()) m = std::max(m, k.jets.rbegin()->first);
    return m;
}

void ZRingElem::add_term(ZMonoKey key, RatFunX coeff) {
    if (coeff.is_zero()) return;
    normalize(key, coeff);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ZRingElem operator+(const ZRingElem& a, const ZRingElem& b) {
    ZRingElem r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

ZRingElem operator-(const ZRingElem& a, const ZRingElem& b) { return a + (-b); }

ZRingElem ZRingElem::operator-() const {
    ZRingElem r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

ZRingElem operator*(const ZRingElem& a, const ZRingElem& b) {
    ZRingElem r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            ZMonoKey k;
            k.ev = ka.ev + kb.ev;
            k.evp = ka.evp + kb.evp;
            k.jets = ka.jets;
            for (const auto& [j, e] : kb.jets) k.jets[j] += e;
            r.add_term(std::move(k), ca * cb);
        }
    return r;
}

ZRingElem ZRingElem::scaled(const RatFunX& c) const {
    ZRingElem r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

ZRingElem ZRingElem::ddx() const {
    ZRingElem r;
    for (const auto& [key, coeff] : terms_) {
        r.add_term(key, coeff.derivative());
        if (key.ev == 1) {
            ZMonoKey k = key;
            k.ev -= 1;
            k.evp += 1;
            r.add_term(std::move(k), coeff);
        }
        if (key.evp == 1) {
            ZMonoKey k = key;
            k.evp -= 1;
            k.ev += 1;
            r.add_term(std::move(k), coeff * vprime_deriv_fun());
        }
        for (const auto& [j, e] : key.jets) {
            ZMonoKey k = key;
            if (--k.jets[j] == 0) k.jets.erase(j);
            k.jets[j + 1] += 1;
            r.add_term(std::move(k), RatFunX(Rat(e)) * coeff);
        }
    }
    return r;
}

ZRingElem ZRingElem::ddy() const {
    // dx/dy = -x(1-x) z^2
    static const ZRingElem factor =
        ZRingElem::coefficient(RatFunX(-PolyX::sigma())) * ZRingElem::zjet(0, 2);
    return factor * ddx();
}

ZRingElem ZRingElem::ddy_n(long n) const {
    ZRingElem r = *this;
    for (long i = 0; i < n; ++i) r = r.ddy();
    return r;
}

SpecialValue ZRingElem::eval_at_half() const {
    SpecialValue out;
    const Rat half(1, 2);
    for (const auto& [key, coeff] : terms_) {
        if (key.evp >= 1) continue;  // v'(1/2) = 0
        Rat c = coeff.eval(half);
        if (key.ev >= 1) c *= Rat(1, 2);
        SpecialValue term = SpecialValue::term(c, 0, 0);
        for (const auto& [j, e] : key.jets) term = term * zjet_at_half(j).pow(e);
        out = out + term;
    }
    return out;
}

std::string ZRingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << coeff.str() << ")";
        if (key.ev) os << " v";
        if (key.evp) os << " v'";
        for (const auto& [j, e] : key.jets) {
            os << " ";
            if (j == 0) os << "z";
            else if (j == 1) os << "z'";
            else if (j == 2) os << "z''";
            else os << "z^(" << j << ")";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace berndt
