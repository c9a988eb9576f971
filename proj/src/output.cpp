#include "berndt/output.hpp"

#include <sstream>

#include "berndt/latex_value.hpp"
#include "json.hpp"

namespace berndt {

bool operator==(const OutputRecord& lhs, const OutputRecord& rhs) {
    return lhs.a == rhs.a && lhs.m == rhs.m && lhs.sign == rhs.sign && lhs.poly == rhs.poly &&
           lhs.latex == rhs.latex && lhs.numeric == rhs.numeric &&
           lhs.verification == rhs.verification;
}

OutputRecord make_record(const IntegralSpec& spec, long digits) {
    OutputRecord rec;
    rec.a = spec.a;
    rec.m = spec.m;
    rec.sign = spec.sign;
    rec.poly = berndt_eval(spec);
    rec.latex = render_latex(rec.poly);
    rec.numeric = eval_qxy(rec.poly, digits).str(static_cast<int>(digits));
    return rec;
}

std::string record_to_json(const OutputRecord& record) {
    nlohmann::json j;
    j["schema"] = "berndt-forge/1";
    j["spec"] = {{"a", record.a}, {"m", record.m}, {"sign", sign_name(record.sign)}};
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& [deg, c] : record.poly.terms())
        poly.push_back({{"coeff", c.str()}, {"x_deg", deg.first}, {"y_deg", deg.second}});
    j["poly"] = std::move(poly);
    j["latex"] = record.latex;
    j["numeric"] = record.numeric;
    if (record.verification) {
        j["verification"] = {{"quad_value", record.verification->quad_value},
                             {"abs_diff", record.verification->abs_diff},
                             {"digits", record.verification->digits}};
    }
    return j.dump(1);
}

OutputRecord record_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("record parse: ") + e.what());
    }
    if (j.value("schema", "") != "berndt-forge/1")
        throw std::runtime_error("record parse: unknown schema");
    OutputRecord rec;
    rec.a = j.at("spec").at("a").get<long>();
    rec.m = j.at("spec").at("m").get<long>();
    const std::string sign = j.at("spec").at("sign").get<std::string>();
    if (sign == "plus") rec.sign = Sign::Plus;
    else if (sign == "minus") rec.sign = Sign::Minus;
    else throw std::runtime_error("record parse: sign must be plus or minus");
    for (const auto& t : j.at("poly")) {
        const auto coeff = Rat::from_string(t.at("coeff").get<std::string>());
        if (!coeff) throw std::runtime_error("record parse: bad rational coefficient");
        rec.poly.add_term(*coeff, t.at("x_deg").get<int>(), t.at("y_deg").get<int>());
    }
    rec.latex = j.at("latex").get<std::string>();
    rec.numeric = j.at("numeric").get<std::string>();
    if (j.contains("verification")) {
        VerificationInfo v;
        v.quad_value = j.at("verification").at("quad_value").get<std::string>();
        v.abs_diff = j.at("verification").at("abs_diff").get<std::string>();
        v.digits = j.at("verification").at("digits").get<long>();
        rec.verification = std::move(v);
    }
    return rec;
}

std::string record_to_plain(const OutputRecord& record) {
    std::ostringstream os;
    os << "integral x^" << record.a << " / (cos x "
       << (record.sign == Sign::Plus ? "+" : "-") << " cosh x)^" << record.m << " dx\n";
    if (record.poly.is_zero()) {
        os << "  = 0\n";
    } else {
        bool first = true;
        for (const auto& [deg, c] : record.poly.terms()) {
            os << (first ? "  = " : "    + ") << c.str();
            if (deg.first != 0) os << " * X^" << deg.first;
            if (deg.second != 0) os << " * Y^" << deg.second;
            os << "\n";
            first = false;
        }
        os << "  with X = Gamma^4(1/4), Y = 1/pi\n";
    }
    os << "  numeric: " << record.numeric << "\n";
    if (record.verification) {
        os << "  quadrature: " << record.verification->quad_value << "\n"
           << "  |difference|: " << record.verification->abs_diff << " at "
           << record.verification->digits << " digits\n";
    }
    return os.str();
}

}  // namespace berndt
