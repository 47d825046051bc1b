#include "noncomm/commands.hpp"

#include "noncomm/error.hpp"
#include "noncomm/permsum.hpp"
#include "noncomm/problem_file.hpp"
#include "noncomm/scalar_solver.hpp"

#include <cstdio>
#include <ostream>

namespace noncomm::cli {

namespace {

std::string format_double(double d) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", d);
    return buffer;
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "closed") return Method::Closed;
    if (name == "iterative") return Method::Iterative;
    if (name == "scalar-roots") return Method::ScalarRoots;
    if (name == "scalar-sum") return Method::ScalarSum;
    return std::nullopt;
}

int cmd_solve(const std::filesystem::path& input, unsigned long p, Method method, std::ostream& out,
              std::ostream& err) {
    std::optional<ProblemFile> loaded;
    try {
        loaded = load_problem(input);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    }
    const ProblemFile& file = *loaded;

    const bool scalar_method = method == Method::ScalarRoots || method == Method::ScalarSum;
    if (scalar_method && file.backend() != BackendKind::Scalar) {
        err << "error: method " << (method == Method::ScalarRoots ? "scalar-roots" : "scalar-sum")
            << " requires the scalar backend, but " << input.string() << " uses " << to_string(file.backend())
            << '\n';
        return exit_mismatch;
    }

    try {
        if (scalar_method) {
            const auto& problem = std::get<ScalarProblem>(file.problem);
            const Rational& c0 = problem.l0().value;
            const Rational& c1 = problem.l1().value;
            const Rational& y1 = problem.y1().value;
            if (method == Method::ScalarSum) {
                out << to_string(solve_scalar_sum(c0, c1, y1, p)) << '\n';
            } else {
                const ScalarValue value = solve_scalar_roots(c0, c1, y1, p);
                out << (value.exact() ? to_string(value.rational()) : format_double(value.approx())) << '\n';
            }
            return exit_ok;
        }
        std::visit(
            [&](const auto& problem) {
                const auto y = method == Method::Closed ? solve_closed(problem, p) : solve_iterative(problem, p);
                out << format_vector(y) << '\n';
            },
            file.problem);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_solver_error;
    }
    return exit_ok;
}

int cmd_enumerate(unsigned u, unsigned v, std::ostream& out, std::ostream& err) {
    std::vector<Word> words;
    try {
        words = enumerate_words(u, v);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::CapExceeded ? exit_mismatch : exit_parse_error;
    }
    for (const Word& w : words) out << (w.empty() ? "<empty>" : w.str()) << '\n';
    out << "count=" << words.size() << '\n';
    return exit_ok;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<SuiteResult> results = run_verify(config);
    const SuiteResult* first_failure = nullptr;
    for (const SuiteResult& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
        if (!r.passed && first_failure == nullptr) first_failure = &r;
    }
    if (first_failure != nullptr) {
        out << "counterexample in " << first_failure->name << ":\n" << first_failure->counterexample << '\n';
        err << "verification failed\n";
        return exit_verify_failed;
    }
    out << "all " << results.size() << " suites passed\n";
    return exit_ok;
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<BenchRow> rows = run_bench(config);
    for (const BenchRow& row : rows)
        if (row.skipped)
            err << "notice: naive (" << row.u << ", " << row.v << ") skipped, " << row.words
                << " words exceed the budget of " << config.naive_word_budget << '\n';
    write_bench_csv(rows, out);
    return exit_ok;
}

}  // namespace noncomm::cli
