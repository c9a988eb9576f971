#pragma once

#include <optional>
#include <string>

#include "berndt/contour.hpp"

namespace berndt {

struct VerificationInfo {
    std::string quad_value;
    std::string abs_diff;
    long digits = 0;
    bool operator==(const VerificationInfo&) const = default;
};

// Machine-readable result for one integral evaluation.
struct OutputRecord {
    long a = 0;
    long m = 1;
    Sign sign = Sign::Plus;
    QXYPoly poly;
    std::string latex;
    std::string numeric;
    std::optional<VerificationInfo> verification;
};

bool operator==(const OutputRecord& lhs, const OutputRecord& rhs);

// Evaluates the spec exactly and fills poly/latex/numeric at the given
// number of decimal digits (verification is left empty).
OutputRecord make_record(const IntegralSpec& spec, long digits);

// JSON under the "berndt-forge/1" schema; rationals travel as "p/q"
// strings, never floats.  record_from_json throws std::runtime_error on
// malformed or wrong-schema input.
std::string record_to_json(const OutputRecord& record);
OutputRecord record_from_json(const std::string& text);

// Human-readable form: one monomial per line in X = Gamma^4(1/4), Y = 1/pi.
std::string record_to_plain(const OutputRecord& record);

}  // namespace berndt
