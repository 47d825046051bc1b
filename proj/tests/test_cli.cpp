#include "noncomm/commands.hpp"
#include "noncomm/permsum.hpp"
#include "noncomm/problem_file.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace noncomm;
using namespace noncomm::cli;

namespace {

const std::filesystem::path data_dir = NONCOMM_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class F>
Run capture(F command) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = command(out, err);
    return {code, out.str(), err.str()};
}

Run solve(const std::filesystem::path& file, unsigned long p, Method method) {
    return capture([&](std::ostream& out, std::ostream& err) { return cmd_solve(file, p, method, out, err); });
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

// Exit status of the real binary, with stdout captured to a file.
int run_binary(const std::string& args, std::string* stdout_text = nullptr) {
    const auto out_path = std::filesystem::temp_directory_path() / "noncomm_cli_test.out";
    const std::string command = std::string(NONCOMM_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int status = std::system(command.c_str());
    if (stdout_text) {
        std::ifstream in(out_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        *stdout_text = buffer.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("solve prints Y_p") {
    const Run fib = solve(data_dir / "fibonacci.json", 10, Method::Closed);
    CHECK(fib.code == exit_ok);
    CHECK(fib.out == "55\n");
    CHECK(solve(data_dir / "fibonacci.json", 10, Method::ScalarSum).out == "55\n");
    CHECK(solve(data_dir / "rational_roots.json", 3, Method::ScalarRoots).out == "3\n");
    CHECK(solve(data_dir / "free_generators.json", 2, Method::Closed).out == "B\xC2\xB7y1\n");
}

TEST_CASE("solve at p = 0 prints the zero vector") {
    CHECK(solve(data_dir / "fibonacci.json", 0, Method::Closed).out == "0\n");
    CHECK(solve(data_dir / "free_generators.json", 0, Method::Closed).out == "0\n");
    CHECK(solve(data_dir / "rational_3x3.json", 0, Method::Iterative).out == "[\"0\",\"0\",\"0\"]\n");
    CHECK(solve(data_dir / "float_2x2.json", 0, Method::Closed).out == "[0.0,0.0]\n");
}

TEST_CASE("solve exit codes") {
    const Run mismatch = solve(data_dir / "rational_3x3.json", 3, Method::ScalarRoots);
    CHECK(mismatch.code == exit_mismatch);
    CHECK(mismatch.err.find("requires the scalar backend") != std::string::npos);

    const auto broken = write_temp("noncomm_broken.json", "{\n \"backend\": \"scalar\",\n \"L0\": \"1/0\", \"L1\": 1, \"Y1\": 1}");
    const Run parse = solve(broken, 3, Method::Closed);
    CHECK(parse.code == exit_parse_error);
    CHECK(parse.err.find("/L0") != std::string::npos);

    const auto degenerate = write_temp("noncomm_c0_zero.json", R"({"backend": "scalar", "L0": 0, "L1": 1, "Y1": 1})");
    const Run solver = solve(degenerate, 3, Method::ScalarRoots);
    CHECK(solver.code == exit_solver_error);
    CHECK(solve(degenerate, 3, Method::ScalarSum).out == "1\n");
}

TEST_CASE("closed and iterative print identical output for bundled exact examples") {
    for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
        if (entry.path().extension() != ".json") continue;
        if (load_problem(entry.path()).backend() == BackendKind::FloatMatrix) continue;
        for (unsigned long p = 0; p <= 20; ++p) {
            CAPTURE(entry.path().string());
            CAPTURE(p);
            const Run closed = solve(entry.path(), p, Method::Closed);
            const Run iterative = solve(entry.path(), p, Method::Iterative);
            CHECK(closed.code == exit_ok);
            CHECK(closed.out == iterative.out);
        }
    }
}

TEST_CASE("enumerate") {
    auto enumerate = [](unsigned u, unsigned v) {
        return capture([&](std::ostream& out, std::ostream& err) { return cmd_enumerate(u, v, out, err); });
    };
    CHECK(enumerate(1, 1).out == "AB\nBA\ncount=2\n");
    CHECK(enumerate(0, 0).out == "<empty>\ncount=1\n");
    CHECK(enumerate(1, 2).out == "ABB\nBAB\nBBA\ncount=3\n");
    const Run capped = enumerate(20, 11);
    CHECK(capped.code == exit_mismatch);
    CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("verify passes at small max-p and catches a corrupted evaluator") {
    VerifyConfig small;
    small.max_p = 1;
    small.matrix_problems = 5;
    const Run ok = capture([&](std::ostream& out, std::ostream& err) { return cmd_verify(small, out, err); });
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    // Closed form whose edge P(0, v) is L1^(v+1) instead of L1^v.
    VerifyConfig broken = small;
    broken.max_p = 8;
    broken.free_closed = [](const FreeProblem& problem, unsigned long p) {
        FreeVector total;
        for (long t = 0; t <= t_bar(p); ++t) {
            const auto u = static_cast<unsigned>(t);
            const auto v = static_cast<unsigned>(p - 1 - 2 * t);
            const FreeElement sum = u == 0 ? perm_sum_dp(problem.l0(), problem.l1(), 0, v) * problem.l1()
                                           : perm_sum_dp(problem.l0(), problem.l1(), u, v);
            total = total + sum * problem.y1();
        }
        return total;
    };
    const Run bad = capture([&](std::ostream& out, std::ostream& err) { return cmd_verify(broken, out, err); });
    CHECK(bad.code == exit_verify_failed);
    CHECK(bad.out.find("FAIL closed-vs-iterative-free") != std::string::npos);
    CHECK(bad.out.find("counterexample in closed-vs-iterative-free:\np = 1\n") != std::string::npos);
}

TEST_CASE("bench rows carry exact counts") {
    BenchConfig config;
    config.backend = BackendKind::Free;
    const Run run = capture([&](std::ostream& out, std::ostream& err) { return cmd_bench(config, out, err); });
    CHECK(run.code == exit_ok);
    CHECK(run.out.rfind("strategy,u,v,words,multiplications,nanoseconds\n", 0) == 0);
    CHECK(run.out.find("\nnaive,8,8,12870,193050,") != std::string::npos);
    CHECK(run.out.find("\ndp,8,8,,142,") != std::string::npos);
    CHECK(run.out.find("\nnaive,1,0,1,0,") != std::string::npos);
    CHECK(run.out.find("\ndp,1,0,,0,") != std::string::npos);
    CHECK(run.out.find("\nnaive,4,4,70,490,") != std::string::npos);

    const auto rows = run_bench(config);
    CHECK(rows.size() == 2u * 9u * 9u);
    for (const BenchRow& row : rows) {
        if (row.strategy == "dp") CHECK(row.multiplications <= 2u * (row.u + 1) * (row.v + 1));
        if (row.strategy == "naive") CHECK(BigInt(row.words) == count_terms(row.u, row.v));
    }
}

TEST_CASE("bench skips naive cells over budget") {
    BenchConfig config;
    config.backend = BackendKind::Scalar;
    config.u_max = 6;
    config.v_max = 6;
    config.naive_word_budget = 100;
    const Run run = capture([&](std::ostream& out, std::ostream& err) { return cmd_bench(config, out, err); });
    CHECK(run.out.find("\nnaive,6,6,924,skipped,skipped\n") != std::string::npos);
    CHECK(run.err.find("naive (6, 6) skipped") != std::string::npos);
    CHECK(run.out.find("\ndp,6,6,,") != std::string::npos);
}

TEST_CASE("binary exit codes") {
    const std::string fib = (data_dir / "fibonacci.json").string();
    std::string out;
    CHECK(run_binary("solve --input " + fib + " --p 30", &out) == 0);
    CHECK(out == "832040\n");
    CHECK(run_binary("solve --input " + fib + " --p 30 --method scalar-roots", &out) == 0);
    CHECK(run_binary("solve --input " + (data_dir / "rational_3x3.json").string() + " --p 2 --method scalar-sum") == 3);
    CHECK(run_binary("solve --input /nonexistent.json --p 2") == 2);
    CHECK(run_binary("solve --input " + fib + " --p 2 --method magic") == 2);
    CHECK(run_binary("solve --p 2") == 2);
    CHECK(run_binary("enumerate --u 1 --v 2", &out) == 0);
    CHECK(out == "ABB\nBAB\nBBA\ncount=3\n");
    CHECK(run_binary("enumerate --u 16 --v 16") == 3);
    CHECK(run_binary("verify --max-p 1 --seed 3", &out) == 0);
    CHECK(run_binary("bench --u 2 --v 2 --backend free", &out) == 0);
    CHECK(out.find("dp,2,2,,") != std::string::npos);
    CHECK(run_binary("bench --backend tensor") == 2);
}

TEST_CASE("NONCOMM_RECUR_CAP reaches the binary") {
    CHECK(run_binary("enumerate --u 3 --v 3") == 0);
    const std::string env_run = "NONCOMM_RECUR_CAP=4 " + std::string(NONCOMM_CLI_PATH) + " enumerate --u 3 --v 3 >/dev/null 2>&1";
    const int status = std::system(env_run.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}
