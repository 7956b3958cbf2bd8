#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

struct SuiteFunction {
    std::string name;
    Spectrum spec;
    OrliczFamily family;
};

/// The 20 test functions used by the direct and inverse checks. Entries
/// with random coefficients depend on `seed`.
std::vector<SuiteFunction> suite_functions(std::uint64_t seed);

struct SuiteOptions {
    std::uint64_t seed = 20240607;
    /// Halve every direct-theorem constant; the direct check must then fail.
    bool corrupt_constant = false;
    /// Criterion ids to run; empty runs 1..11.
    std::vector<int> only;
    int h_grid = 2048;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    bool solver_failure = false;  ///< an LP or iteration did not converge
    std::string detail;
    /// Numbers behind the verdict, printed at full precision; used for the
    /// rerun determinism check.
    std::string digest;
    double seconds = 0.0;
};

struct SuiteReport {
    std::vector<CriterionResult> results;
    double seconds = 0.0;
    bool all_pass() const;
    bool solver_failure() const;
};

/// "PASS 4 sharp constant cross-check: ... (1.2 s)".
std::string format_line(const CriterionResult& r);

/// Runs one criterion.
CriterionResult run_criterion(int id, const SuiteOptions& options);

/// Runs the selected criteria in order, calling `on_result` after each.
/// Criterion 11 covers wall-clock time of everything run before it and
/// repeats the cheap criteria to compare digests.
SuiteReport run_suite(const SuiteOptions& options,
                      const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace orlapprox
