#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "algcut_app/report.hpp"

namespace algcut::app {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

/// Runs the randomized and exhaustive property suites of every module.
/// Deterministic for a given seed.
std::vector<SuiteResult> run_property_suites(std::uint64_t seed = 20260417);

/// Re-runs every scenario in `dir` that has golden reports under
/// `dir/golden/<scenario>.<command>.txt` and compares them byte for byte.
SuiteResult check_golden_corpus(const std::filesystem::path& dir);

/// Report for the `verify` command; property_failure is set if anything failed.
Report run_verify(const std::optional<std::filesystem::path>& corpus);

} // namespace algcut::app
