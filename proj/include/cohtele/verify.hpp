#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cohtele {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

inline constexpr std::uint64_t kDefaultVerifySeed = 1729;

/// suite is one of {"theorem", "formulas", "basis", "bounds"}.
VerificationReport verify_suite(const std::string& suite, std::uint64_t seed);

/// All four suites in a fixed order.
std::vector<VerificationReport> verify_all(std::uint64_t seed);

}  // namespace cohtele
