#pragma once

// Cross-module invariant suite behind the `verify` command. Each check runs
// exhaustively up to its own size bound, capped by max_n, and reports the
// first counterexample it meets.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "threshold_atlas/threshold_bijections.hpp"

namespace threshold_atlas {

struct VerifyOptions {
    std::size_t max_n = 8;
    int jobs = 1;
    /// Replacement for pair_to_threshold_perm in the checks that exercise it.
    /// Only used to confirm that the suite catches a broken map.
    std::function<ThresholdPermutation(const ThresholdPair&)> pair_to_perm;
};

struct CheckResult {
    std::string name;
    std::size_t bound = 0;   // largest n examined
    std::size_t objects = 0; // objects examined
    bool passed = true;
    std::optional<std::string> counterexample;
};

/// Runs every check; DomainError unless 2 <= max_n <= 8.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Mutant of pair_to_threshold_perm that flips the sign of the last entry.
ThresholdPermutation faulty_pair_to_threshold_perm(const ThresholdPair& tp);

}  // namespace threshold_atlas
