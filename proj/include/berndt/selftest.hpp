#pragma once

#include <iosfwd>

namespace berndt {

struct SelftestOptions {
    bool deep = false;
    std::ostream* log = nullptr;  // one line per invariant when set
};

// Runs the cross-module invariant suite; stops at the first failure.
// Returns true when every invariant holds.
bool run_selftest(const SelftestOptions& opts);

}  // namespace berndt
