#pragma once

// Reproducible verification suites: exhaustive window sweeps and seeded
// randomized checks over the algebra, its derivations and its automorphisms.

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsv {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t violations = 0;
    /// First few failures, human readable.
    std::vector<std::string> details;
    /// Check-specific data (kernel bases, nullities, ...).
    nlohmann::json data = nlohmann::json::object();

    bool passed() const { return violations == 0; }
};

/// Comparison of one printed composition relation against the generator-wise oracle.
struct VerdictRow {
    std::string relation;
    std::string printed;
    bool agree = true;
    std::size_t cases = 0;
    /// Smallest disagreeing pair found: {"p", "q", "printed", "oracle"}.
    std::optional<nlohmann::json> witness;
};

struct Report {
    std::string suite;
    int radius = 0;
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<CheckResult> checks;
    std::vector<VerdictRow> verdicts;

    bool passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    std::string suite = "all";
    /// Suite default when unset.
    std::optional<int> radius;
    std::uint64_t seed = 1;
    int cases = 100;
};

const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown suite or bad radius/cases.
Report run_verify(const VerifyOptions &opts);

} // namespace tsv
