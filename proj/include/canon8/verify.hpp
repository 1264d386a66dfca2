#pragma once

// The verification suite behind `verify`: closed-form regression of all
// nine families over an n range, the frozen building-data tables, tower
// numerics, brute-force oracles for section counts and parity logic, and
// negative controls. Each check reports pass/fail counts; the suite as a
// whole passes iff every count of failures is zero.

#include <string>
#include <vector>

#include "canon8/picard.hpp"

namespace canon8 {

struct VerifyOptions {
    Int n_lo = 2;
    Int n_hi = 50;
    // Test-harness hook: negates the intersection form inside the checks'
    // independent re-derivations, forcing failures. Never exposed on the CLI.
    bool flip_intersection_sign = false;
};

struct CheckResult {
    std::string name;
    Int passed = 0;
    Int failed = 0;
    std::vector<std::string> failures;  // first few failure descriptions
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    Int total_passed() const;
    Int total_failed() const;
};

VerifySummary run_verification(const VerifyOptions& opts);

std::string summary_text(const VerifySummary& s);

}  // namespace canon8
