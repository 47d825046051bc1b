#pragma once

#include "noncomm/bench.hpp"
#include "noncomm/verify.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace noncomm::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_parse_error = 2,
    exit_mismatch = 3,  // method/backend mismatch, enumeration cap exceeded
    exit_solver_error = 4,
};

enum class Method { Closed, Iterative, ScalarRoots, ScalarSum };

std::optional<Method> parse_method(std::string_view name) noexcept;

int cmd_solve(const std::filesystem::path& input, unsigned long p, Method method, std::ostream& out,
              std::ostream& err);
int cmd_enumerate(unsigned u, unsigned v, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

}  // namespace noncomm::cli
