#include "berndt/latex_value.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace berndt {

// ---- rendering ----------------------------------------------------------

namespace {

// denominator as odd * 2^e, rendered "odd\cdot 2^{e}"
std::string denom_core(const Int& den) {
    Int odd = den;
    long e = 0;
    while (mpz_even_p(odd.get_mpz_t()) && odd != 0) {
        odd /= 2;
        ++e;
    }
    std::ostringstream os;
    if (odd != 1) os << odd.get_str();
    if (e > 0) {
        if (odd != 1) os << "\\cdot ";
        os << "2^{" << e << "}";
    }
    return os.str();
}

std::string pi_power(long dy) {
    if (dy == 0) return {};
    if (dy == 1) return "\\pi";
    std::ostringstream os;
    os << "\\pi^{" << dy << "}";
    return os.str();
}

}  // namespace

std::string render_latex(const QXYPoly& poly) {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : poly.terms()) {
        const auto [dx, dy] = deg;
        const bool neg = c.sign() < 0;
        if (!first || neg) os << (neg ? "-" : "+");
        first = false;

        const Rat a = c.abs();
        std::ostringstream numer;
        if (a.num() != 1 || dx == 0) numer << a.num().get_str();
        if (dx > 0) numer << "\\Gamma^{" << 4 * dx << "}(1/4)";

        std::string den = denom_core(a.den()) + pi_power(dy);
        if (den.empty()) os << numer.str();
        else os << "\\frac{" << numer.str() << "}{" << den << "}";
    }
    return os.str();
}

// ---- parsing ------------------------------------------------------------

namespace {

struct TermAccum {
    Rat coeff{1};
    long g = 0;   // exponent of Gamma(1/4)
    long pi = 0;  // exponent of pi
};

class LatexParser {
public:
    explicit LatexParser(const std::string& s) : s_(s) {}

    QXYPoly parse() {
        QXYPoly poly;
        skip_ws();
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        while (true) {
            add_term(poly, parse_term(), sign);
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return poly;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        std::ostringstream os;
        os << "latex parse error at offset " << pos_ << ": " << why;
        throw std::runtime_error(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(const char* w) {
        skip_ws();
        const size_t n = std::char_traits<char>::length(w);
        if (s_.compare(pos_, n, w) == 0) {
            pos_ += n;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int parse_int() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits.push_back(s_[pos_++]);
        if (digits.empty()) fail("expected an integer");
        return Int(digits);
    }

    // '^' followed by a braced integer or a single digit; 1 when absent
    long parse_exponent() {
        if (!eat('^')) return 1;
        if (eat('{')) {
            const Int e = parse_int();
            if (!eat('}')) fail("expected '}' after exponent");
            return e.get_si();
        }
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return s_[pos_++] - '0';
        fail("expected exponent");
    }

    // product of factors; dir = +1 in a numerator, -1 in a denominator
    void parse_product(TermAccum& acc, int dir) {
        bool saw_factor = false;
        int sign = 1;
        if (eat('-')) sign = -1;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            const char c = s_[pos_];
            if (c == '}' || c == '+' || c == '-') break;
            if (eat_word("\\cdot")) continue;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const Int n = parse_int();
                const long e = parse_exponent();
                Rat f{1};
                for (long i = 0; i < e; ++i) f = f * Rat(n);
                acc.coeff = (dir > 0) ? acc.coeff * f : acc.coeff / f;
            } else if (eat_word("\\pi")) {
                acc.pi += dir * parse_exponent();
            } else if (eat_word("\\Gamma")) {
                const long e = parse_exponent();
                bool three_quarters = false;
                if (eat('(')) {
                    if (eat_word("1/4")) three_quarters = false;
                    else if (eat_word("3/4")) three_quarters = true;
                    else fail("expected 1/4 or 3/4 as Gamma argument");
                    if (!eat(')')) fail("expected ')' after Gamma argument");
                }
                if (three_quarters) {
                    // Gamma(3/4)^e = (pi sqrt 2)^e / Gamma(1/4)^e, e even
                    if (e % 2 != 0) fail("odd Gamma(3/4) power is outside Q[X, Y]");
                    acc.g -= dir * e;
                    acc.pi += dir * e;
                    const Rat f = pow2(e / 2);
                    acc.coeff = (dir > 0) ? acc.coeff * f : acc.coeff / f;
                } else {
                    acc.g += dir * e;
                }
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            saw_factor = true;
        }
        if (!saw_factor) fail("empty product");
        if (sign < 0) acc.coeff = -acc.coeff;
    }

    TermAccum parse_term() {
        TermAccum acc;
        if (eat_word("\\frac")) {
            if (!eat('{')) fail("expected '{' after \\frac");
            parse_product(acc, +1);
            if (!eat('}')) fail("expected '}' closing numerator");
            if (!eat('{')) fail("expected '{' opening denominator");
            parse_product(acc, -1);
            if (!eat('}')) fail("expected '}' closing denominator");
        } else {
            parse_product(acc, +1);
        }
        return acc;
    }

    void add_term(QXYPoly& poly, const TermAccum& acc, int sign) {
        if (acc.g < 0 || acc.g % 4 != 0) {
            std::ostringstream os;
            os << "Gamma exponent " << acc.g << " is not a nonnegative multiple of 4";
            fail(os.str());
        }
        if (acc.pi > 0) {
            std::ostringstream os;
            os << "positive pi exponent " << acc.pi << " survives normalization";
            fail(os.str());
        }
        Rat c = acc.coeff;
        if (sign < 0) c = -c;
        poly.add_term(c, static_cast<int>(acc.g / 4), static_cast<int>(-acc.pi));
    }
};

}  // namespace

QXYPoly parse_latex(const std::string& text) { return LatexParser(text).parse(); }

// ---- published reference values ----------------------------------------

const std::vector<ReferenceValue>& reference_values() {
    static const std::vector<ReferenceValue> table = {
        {3, 1, Sign::Minus, "-\\frac{\\Gamma^8(1/4)}{256\\pi^2}"},
        {7, 1, Sign::Minus, "\\frac{9\\Gamma^{16}(1/4)}{2^{13}\\pi^4}"},
        {5, 1, Sign::Plus, "\\frac{3\\pi^3\\Gamma^6(1/4)}{256\\Gamma^6(3/4)}"},
        {9, 1, Sign::Plus, "\\frac{3^3\\cdot 7\\pi^5\\Gamma^{10}(1/4)}{2^{12}\\Gamma^{10}(3/4)}"},
        {9, 2, Sign::Plus,
         "-\\frac{189\\Gamma^{16}(1/4)}{5\\cdot 2^{15}\\pi^{4}}"
         "+\\frac{9\\Gamma^{24}(1/4)}{2^{21}\\pi^{8}}"},
        {9, 2, Sign::Minus,
         "\\frac{27\\Gamma^{16}(1/4)}{5\\cdot 2^{12}\\pi^{4}}"
         "-\\frac{\\Gamma^{24}(1/4)}{2^{18}\\pi^{8}}"},
        {11, 3, Sign::Minus,
         "-\\frac{4455\\Gamma^{16}}{2^{15}\\pi^4}-\\frac{189\\Gamma^{24}}{2^{20}\\pi^6}"
         "+\\frac{297\\Gamma^{24}}{2^{18}\\pi^7}-\\frac{935\\Gamma^{24}}{2^{20}\\pi^8}"
         "-\\frac{195\\Gamma^{32}}{2^{27}\\pi^{12}}"},
        {13, 3, Sign::Plus,
         "\\frac{405405\\Gamma^{20}}{2^{20}\\pi^5}+\\frac{68607\\Gamma^{28}}{2^{27}\\pi^7}"
         "-\\frac{107757\\Gamma^{28}}{2^{25}\\pi^8}+\\frac{84591\\Gamma^{28}}{2^{25}\\pi^9}"
         "+\\frac{17679\\Gamma^{36}}{2^{32}\\pi^{13}}"},
        {33, 2, Sign::Minus,
         "\\frac{55168390953244107 \\Gamma^{64}}{85\\cdot 2^{36} \\pi ^{16}}"
         "-\\frac{135515509591329 \\Gamma^{72}}{2^{42} \\pi ^{20}}"},
        {33, 2, Sign::Plus,
         "-\\frac{1807702666364949654069 \\Gamma^{64}}{85\\cdot 2^{51}  \\pi ^{16}}"
         "+\\frac{4440707733798260001 \\Gamma^{72}}{2^{57} \\pi ^{20}}"},
    };
    return table;
}

const char* x9m6_reference_latex() {
    return "\\frac{-63}{5\\cdot 2^{10}}"
           "+\\frac{1071\\Gamma^{8}}{5^2\\cdot 2^{13}\\pi^{2}}"
           "-\\frac{21\\Gamma^{8}}{2^{12}\\pi^{3}}"
           "+\\frac{63\\Gamma^{8}}{2^{16}\\pi^{4}}"
           "-\\frac{21\\Gamma^{16}}{5^3\\cdot 2^{13}\\pi^{4}}"
           "+\\frac{3\\Gamma^{16}}{5\\cdot 2^{13}\\pi^{5}}"
           "-\\frac{161\\Gamma^{16}}{5\\cdot 2^{19}\\pi^{6}}"
           "+\\frac{21\\Gamma^{16}}{2^{21}\\pi^{8}}"
           "+\\frac{\\Gamma^{24}}{5^2\\cdot 2^{19}\\pi^{8}}"
           "-\\frac{\\Gamma^{24}}{3\\cdot 2^{20}\\pi^{9}}"
           "+\\frac{69\\Gamma^{24}}{5\\cdot 2^{25}\\pi^{10}}"
           "-\\frac{21\\Gamma^{24}}{5\\cdot 2^{24}\\pi^{11}}"
           "+\\frac{63\\Gamma^{24}}{5\\cdot 2^{27}\\pi^{12 }}"
           "-\\frac{17\\Gamma^{32}}{3\\cdot 5^2\\cdot 2^{31}\\pi^{14}}"
           "+\\frac{13\\Gamma^{32}}{5\\cdot 2^{34}\\pi^{16}}"
           "+\\frac{3\\Gamma^{40}}{5^2\\cdot 2^{40}\\pi^{20}}";
}

}  // namespace berndt
