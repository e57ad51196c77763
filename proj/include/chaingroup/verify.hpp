#pragma once

#include "chaingroup/census.hpp"

#include <optional>
#include <string>

namespace chaingroup {

struct VerifyOptions {
    std::vector<int> ns;        // empty: the checker's default sweep
    int p = 0, r = 0;           // T-ELEMENTARY; 0 sweeps the defaults
    int samples = 5;            // per instance, for sampled checkers
    std::uint64_t seed = kDefaultSeed;
    std::size_t cap = kDefaultEnumerationCap;
    int parallelism = 0;        // 0: all cores
};

enum class VerifyStatus { Pass, Fail, Skipped };

struct Counterexample {
    Forest forest;
    std::string expected;
    std::string actual;
};

struct VerificationResult {
    std::string theorem;
    std::string params;         // e.g. "n=5"
    VerifyStatus status = VerifyStatus::Pass;
    std::optional<Counterexample> counterexample;
    std::uint64_t instances = 0;
    double elapsed_seconds = 0;  // informational; everything else is deterministic
};

/// Registered checker ids, in report order.
const std::vector<std::string> &theorem_ids();

/// One-line statement of the claim a checker verifies.
std::string theorem_summary(const std::string &id);

/// Run one checker; one result per parameter point of its sweep.
/// Throws UnknownTheorem / LimitExceeded.
std::vector<VerificationResult> verify_theorem(const std::string &id, const VerifyOptions &options);

/// Every registered checker at its default bounds.
std::vector<VerificationResult> verify_all(const VerifyOptions &options);

} // namespace chaingroup
