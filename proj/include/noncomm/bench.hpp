#pragma once

#include "noncomm/problem_file.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace noncomm {

struct BenchConfig {
    unsigned u_max = 8;
    unsigned v_max = 8;
    BackendKind backend = BackendKind::RationalMatrix;
    std::size_t dimension = 3;
    std::uint64_t seed = 42;
    /// Naive cells whose word count exceeds this are skipped.
    std::uint64_t naive_word_budget = 1'000'000;
    unsigned threads = 1;
};

struct BenchRow {
    std::string strategy;  // "naive" or "dp"
    unsigned u = 0;
    unsigned v = 0;
    std::uint64_t words = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t nanoseconds = 0;
    bool skipped = false;
};

/// One naive and one dp row per (u, v) in [0, u_max] x [0, v_max]. Counts come
/// from MultCounter. L0, L1 are the free generators on the free backend and
/// seeded random elements otherwise.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// "strategy,u,v,words,multiplications,nanoseconds" header plus one line per row;
/// skipped cells print "skipped" in the measured columns.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace noncomm
