#include "noncomm/commands.hpp"
#include "noncomm/error.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace noncomm;

    CLI::App app{"Exact solver for Y_{p+2} = L0 Y_p + L1 Y_{p+1} with noncommutative coefficients"};
    app.require_subcommand(1);

    std::string input;
    unsigned long p = 0;
    std::string method_name = "closed";
    auto* solve = app.add_subcommand("solve", "Solve a problem file for Y_p");
    solve->add_option("--input", input, "Problem file (JSON)")->required();
    solve->add_option("--p", p, "Index p >= 0")->required();
    solve->add_option("--method", method_name, "closed | iterative | scalar-roots | scalar-sum")
        ->capture_default_str();

    unsigned u = 0;
    unsigned v = 0;
    auto* enumerate = app.add_subcommand("enumerate", "List the words with u A's and v B's");
    enumerate->add_option("--u", u, "Number of L0 factors")->required();
    enumerate->add_option("--v", v, "Number of L1 factors")->required();

    VerifyConfig verify_config;
    auto* verify = app.add_subcommand("verify", "Run the oracle and identity suites");
    verify->add_option("--max-p", verify_config.max_p, "Largest p checked")->capture_default_str();
    verify->add_option("--seed", verify_config.seed, "Seed for randomized suites")->capture_default_str();
    verify->add_option("--threads", verify_config.threads, "Threads for naive enumeration")->capture_default_str();

    BenchConfig bench_config;
    std::string backend_name = "rational-matrix";
    auto* bench = app.add_subcommand("bench", "Compare naive and dp permutation-sum evaluation");
    bench->add_option("--u", bench_config.u_max, "Largest u")->capture_default_str();
    bench->add_option("--v", bench_config.v_max, "Largest v")->capture_default_str();
    bench->add_option("--backend", backend_name, "rational-matrix | float-matrix | scalar | free")
        ->capture_default_str();
    bench->add_option("--dim", bench_config.dimension, "Matrix dimension")->capture_default_str();
    bench->add_option("--seed", bench_config.seed, "Seed for random coefficients")->capture_default_str();
    bench->add_option("--budget", bench_config.naive_word_budget, "Skip naive cells with more words")
        ->capture_default_str();
    bench->add_option("--threads", bench_config.threads, "Threads for naive enumeration")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_parse_error;
    }

    try {
        if (*solve) {
            const auto method = cli::parse_method(method_name);
            if (!method) {
                std::cerr << "error: unknown method \"" << method_name << "\"\n";
                return cli::exit_parse_error;
            }
            return cli::cmd_solve(input, p, *method, std::cout, std::cerr);
        }
        if (*enumerate) return cli::cmd_enumerate(u, v, std::cout, std::cerr);
        if (*verify) return cli::cmd_verify(verify_config, std::cout, std::cerr);

        const auto backend = parse_backend(backend_name);
        if (!backend) {
            std::cerr << "error: unknown backend \"" << backend_name << "\"\n";
            return cli::exit_parse_error;
        }
        bench_config.backend = *backend;
        return cli::cmd_bench(bench_config, std::cout, std::cerr);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return cli::exit_solver_error;
    }
}
