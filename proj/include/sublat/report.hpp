#pragma once

#include <string>
#include <vector>

namespace sublat {

// One named check; failures are data, not errors. A skipped check (a
// hypothesis that does not apply) counts as passing.
struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass && !c.skipped) return false;
        return true;
    }

    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const auto& c : checks)
            if (!c.pass && !c.skipped) out.push_back(c);
        return out;
    }
};

}  // namespace sublat
