#pragma once

#include "noncomm/problem_file.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace noncomm {

struct VerifyConfig {
    unsigned max_p = 16;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    unsigned matrix_problems = 100;
    /// Closed-form solver under test on the free backend. Replaceable so that a
    /// deliberately broken evaluator can be shown to be caught.
    std::function<FreeVector(const FreeProblem&, unsigned long)> free_closed = [](const FreeProblem& problem,
                                                                                  unsigned long p) {
        return solve_closed(problem, p);
    };
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string counterexample;
    std::size_t checks = 0;
};

/// Runs every suite (no early exit) and returns one result per suite, in order.
std::vector<SuiteResult> run_verify(const VerifyConfig& config);

}  // namespace noncomm
