#pragma once

#include "noncomm/error.hpp"
#include "noncomm/permsum.hpp"
#include "noncomm/ring.hpp"

#include <cstddef>
#include <vector>

namespace noncomm {

/// floor((p - 1) / 2), with -1 at p = 0 (empty closed-form sum).
constexpr long t_bar(unsigned long p) noexcept {
    return p == 0 ? -1 : static_cast<long>((p - 1) / 2);
}

/// Y_{p+2} = L0 Y_p + L1 Y_{p+1} with Y_0 = 0 and Y_1 = y1.
template <RingElement R, ModuleVector<R> V>
class CauchyProblem {
public:
    using ring_type = R;
    using vector_type = V;

    CauchyProblem(R l0, R l1, V y1) : l0_(std::move(l0)), l1_(std::move(l1)), y1_(std::move(y1)) {
        if (!compatible(l0_, l1_) || !compatible(l0_, y1_))
            throw Error(ErrorKind::DimensionMismatch, "Cauchy problem: L0, L1 and Y1 must share one dimension");
    }

    const R& l0() const noexcept { return l0_; }
    const R& l1() const noexcept { return l1_; }
    const V& y1() const noexcept { return y1_; }

    friend bool operator==(const CauchyProblem&, const CauchyProblem&) = default;

private:
    R l0_;
    R l1_;
    V y1_;
};

/// Ground truth: iterate the recurrence p - 1 times from (Y_0, Y_1).
template <RingElement R, ModuleVector<R> V>
V solve_iterative(const CauchyProblem<R, V>& problem, unsigned long p) {
    V prev = zero_like(problem.y1());
    if (p == 0) return prev;
    V cur = problem.y1();
    for (unsigned long k = 1; k < p; ++k) {
        V next = problem.l0() * prev + problem.l1() * cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Y_p = sum_{t=0}^{t_bar(p)} {L0^(t) L1^(p-1-2t)} y1.
///
/// The permutation sums come from one staircase PermSumTable whose row t ends at
/// column p-1-2t, which is exactly the set of entries the sum and their left-split
/// dependencies touch.
template <RingElement R, ModuleVector<R> V>
V solve_closed(const CauchyProblem<R, V>& problem, unsigned long p, MultCounter* counter = nullptr) {
    V total = zero_like(problem.y1());
    const long top = t_bar(p);
    if (top < 0) return total;

    std::vector<std::size_t> limits;
    limits.reserve(static_cast<std::size_t>(top) + 1);
    for (long t = 0; t <= top; ++t) limits.push_back(static_cast<std::size_t>(p - 1 - 2 * t));
    const PermSumTable<R> table(problem.l0(), problem.l1(), limits, counter);

    for (long t = 0; t <= top; ++t) {
        const auto u = static_cast<std::size_t>(t);
        total = std::move(total) + table.at(u, limits[u]) * problem.y1();
    }
    return total;
}

}  // namespace noncomm
