#include "noncomm/bench.hpp"

#include "noncomm/permsum.hpp"
#include "noncomm/random.hpp"

#include <chrono>
#include <ostream>
#include <random>

namespace noncomm {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

template <RingElement R>
void bench_pair(const R& l0, const R& l1, const BenchConfig& config, std::vector<BenchRow>& rows) {
    for (unsigned u = 0; u <= config.u_max; ++u) {
        for (unsigned v = 0; v <= config.v_max; ++v) {
            const BigInt words = count_terms(u, v);

            BenchRow naive{"naive", u, v};
            if (words > config.naive_word_budget) {
                naive.words = words.fits_ulong_p() ? words.get_ui() : ~std::uint64_t{0};
                naive.skipped = true;
            } else {
                MultCounter counter;
                const auto start = Clock::now();
                const R sum = perm_sum_naive(l0, l1, u, v, {.counter = &counter, .threads = config.threads,
                                                            .cap = static_cast<std::size_t>(u) + v});
                naive.nanoseconds = elapsed_ns(start);
                naive.words = counter.words();
                naive.multiplications = counter.multiplications();
                (void)sum;
            }
            rows.push_back(naive);

            BenchRow dp{"dp", u, v};
            MultCounter counter;
            const auto start = Clock::now();
            const R sum = perm_sum_dp(l0, l1, u, v, &counter);
            dp.nanoseconds = elapsed_ns(start);
            dp.multiplications = counter.multiplications();
            (void)sum;
            rows.push_back(dp);
        }
    }
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    std::mt19937_64 rng(config.seed);
    switch (config.backend) {
        case BackendKind::RationalMatrix: {
            const auto l0 = random_rational_matrix(rng, config.dimension);
            const auto l1 = random_rational_matrix(rng, config.dimension);
            bench_pair(l0, l1, config, rows);
            break;
        }
        case BackendKind::FloatMatrix: {
            const auto l0 = random_float_matrix(rng, config.dimension);
            const auto l1 = random_float_matrix(rng, config.dimension);
            bench_pair(l0, l1, config, rows);
            break;
        }
        case BackendKind::Scalar: {
            const Scalar l0(random_nonzero_rational(rng));
            const Scalar l1(random_nonzero_rational(rng));
            bench_pair(l0, l1, config, rows);
            break;
        }
        case BackendKind::Free:
            bench_pair(FreeElement::generator_l0(), FreeElement::generator_l1(), config, rows);
            break;
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "strategy,u,v,words,multiplications,nanoseconds\n";
    for (const BenchRow& row : rows) {
        out << row.strategy << ',' << row.u << ',' << row.v << ',';
        // The dp strategy evaluates no words.
        if (row.strategy != "dp") out << row.words;
        out << ',';
        if (row.skipped) {
            out << "skipped,skipped\n";
        } else {
            out << row.multiplications << ',' << row.nanoseconds << '\n';
        }
    }
}

}  // namespace noncomm
