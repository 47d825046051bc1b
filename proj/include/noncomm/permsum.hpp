#pragma once

#include "noncomm/error.hpp"
#include "noncomm/rational.hpp"
#include "noncomm/ring.hpp"
#include "noncomm/word.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace noncomm {

/// Instrumentation for one evaluation: ring multiplications and words evaluated.
/// Counts only grow; reset() between evaluations.
class MultCounter {
public:
    void add_multiplications(std::uint64_t n = 1) noexcept { multiplications_ += n; }
    void add_words(std::uint64_t n = 1) noexcept { words_ += n; }
    std::uint64_t multiplications() const noexcept { return multiplications_; }
    std::uint64_t words() const noexcept { return words_; }
    void reset() noexcept { multiplications_ = 0; words_ = 0; }

private:
    std::uint64_t multiplications_ = 0;
    std::uint64_t words_ = 0;
};

inline constexpr std::size_t default_enumeration_cap = 30;

/// Maximum u + v for word enumeration; NONCOMM_RECUR_CAP overrides the default.
std::size_t enumeration_cap();

/// Number of distinct words with u letters L0 and v letters L1: C(u+v, min(u,v)).
BigInt count_terms(unsigned u, unsigned v);

/// All distinct words with u L0's and v L1's, lexicographic with L0 < L1.
/// Throws Error(CapExceeded) when u + v > cap.
std::vector<Word> enumerate_words(unsigned u, unsigned v, std::size_t cap = enumeration_cap());

/// Pascal's rule C(n,k) + C(n,k+1) == C(n+1,k+1), evaluated exactly.
bool stifel_check(long n, long k);

namespace detail {

template <RingElement R>
void require_compatible(const R& a, const R& b, const char* op) {
    if (!compatible(a, b))
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": coefficients are not compatible");
}

}  // namespace detail

/// Left-to-right product of the word with L0 -> l0, L1 -> l1; the empty word is I.
template <RingElement R>
R word_to_element(const Word& w, const R& l0, const R& l1, MultCounter* counter = nullptr) {
    detail::require_compatible(l0, l1, "word_to_element");
    if (w.empty()) return identity_like(l0);
    auto letter = [&](Letter x) -> const R& { return x == Letter::L0 ? l0 : l1; };
    R acc = letter(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) acc = acc * letter(w[i]);
    if (counter) counter->add_multiplications(w.size() - 1);
    return acc;
}

struct NaiveOptions {
    MultCounter* counter = nullptr;
    unsigned threads = 1;
    std::size_t cap = enumeration_cap();
};

/// The permutation sum by definition: every distinct word evaluated and summed.
/// With threads > 1 the word list is split into contiguous chunks whose partial
/// sums are added in chunk order.
template <RingElement R>
R perm_sum_naive(const R& l0, const R& l1, unsigned u, unsigned v, const NaiveOptions& options = {}) {
    detail::require_compatible(l0, l1, "perm_sum_naive");
    const std::vector<Word> words = enumerate_words(u, v, options.cap);

    const std::size_t chunks = std::clamp<std::size_t>(options.threads, 1, words.size());
    std::vector<R> partial(chunks, zero_like(l0));
    std::vector<MultCounter> counters(chunks);
    auto work = [&](std::size_t chunk) {
        const std::size_t begin = words.size() * chunk / chunks;
        const std::size_t end = words.size() * (chunk + 1) / chunks;
        for (std::size_t i = begin; i < end; ++i) {
            partial[chunk] = std::move(partial[chunk]) + word_to_element(words[i], l0, l1, &counters[chunk]);
            counters[chunk].add_words();
        }
    };
    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
    }

    R total = zero_like(l0);
    for (std::size_t c = 0; c < chunks; ++c) {
        total = std::move(total) + partial[c];
        if (options.counter) {
            options.counter->add_multiplications(counters[c].multiplications());
            options.counter->add_words(counters[c].words());
        }
    }
    return total;
}

/// Memo table of permutation sums P(u, v) over a staircase region: row u holds
/// columns 0..limits[u], with limits non-increasing in u. Filled by the left split
///   P(u, v) = l0 * P(u-1, v) + l1 * P(u, v-1),  P(0,0) = I,
/// with the edges P(u, 0) = l0^u and P(0, v) = l1^v.
template <RingElement R>
class PermSumTable {
public:
    PermSumTable(const R& l0, const R& l1, std::vector<std::size_t> limits, MultCounter* counter = nullptr)
        : limits_(std::move(limits)) {
        detail::require_compatible(l0, l1, "perm_sum_dp");
        if (!std::is_sorted(limits_.rbegin(), limits_.rend()))
            throw Error(ErrorKind::Domain, "perm-sum table row limits must be non-increasing");
        rows_.resize(limits_.size());
        std::uint64_t mults = 0;
        for (std::size_t u = 0; u < limits_.size(); ++u) {
            auto& row = rows_[u];
            row.reserve(limits_[u] + 1);
            for (std::size_t v = 0; v <= limits_[u]; ++v) {
                if (u == 0 && v == 0) {
                    row.push_back(identity_like(l0));
                } else if (v == 0) {
                    row.push_back(u == 1 ? l0 : l0 * rows_[u - 1][0]);
                    mults += u == 1 ? 0 : 1;
                } else if (u == 0) {
                    row.push_back(v == 1 ? l1 : l1 * row[v - 1]);
                    mults += v == 1 ? 0 : 1;
                } else {
                    row.push_back(l0 * rows_[u - 1][v] + l1 * row[v - 1]);
                    mults += 2;
                }
            }
        }
        if (counter) counter->add_multiplications(mults);
    }

    /// Full rectangle 0..u by 0..v.
    static PermSumTable rectangle(const R& l0, const R& l1, unsigned u, unsigned v, MultCounter* counter = nullptr) {
        return PermSumTable(l0, l1, std::vector<std::size_t>(u + 1, v), counter);
    }

    bool contains(std::size_t u, std::size_t v) const noexcept {
        return u < limits_.size() && v <= limits_[u];
    }

    const R& at(std::size_t u, std::size_t v) const {
        if (!contains(u, v))
            throw Error(ErrorKind::Domain, "perm-sum table has no entry (" + std::to_string(u) + ", " +
                                               std::to_string(v) + ")");
        return rows_[u][v];
    }

private:
    std::vector<std::size_t> limits_;
    std::vector<std::vector<R>> rows_;
};

/// The permutation sum via the memoised split recursion; Theta(u*v) multiplications,
/// at most 2*(u+1)*(v+1).
template <RingElement R>
R perm_sum_dp(const R& l0, const R& l1, unsigned u, unsigned v, MultCounter* counter = nullptr) {
    return PermSumTable<R>::rectangle(l0, l1, u, v, counter).at(u, v);
}

}  // namespace noncomm
