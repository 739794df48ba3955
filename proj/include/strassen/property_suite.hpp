#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strassen/scalar.hpp"

namespace strassen {

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string counterexample;  // first failure, empty when passed
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int trials = 0;
    FieldDesc field;
    std::vector<PropertyCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    /// One "PASS name" / "FAIL name: counterexample" line per check.
    std::string str() const;
};

/// Runs every algebraic identity the construction rests on, with `trials`
/// randomized instances per check (finite checks are exhaustive instead).
/// Deterministic: a given (seed, trials, field) always produces the same
/// report. Throws std::invalid_argument for trials < 1.
SuiteReport run_property_suite(std::uint64_t seed, int trials, const FieldDesc& field);

}  // namespace strassen
