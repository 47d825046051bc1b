#include "noncomm/verify.hpp"

#include "noncomm/permsum.hpp"
#include "noncomm/random.hpp"
#include "noncomm/scalar_solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace noncomm {

namespace {

// Records the first failure of a suite; later failures only bump the count.
class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    template <class Describe>
    void check(bool ok, Describe describe) {
        ++result_.checks;
        if (ok || !result_.passed) return;
        result_.passed = false;
        result_.counterexample = describe();
    }

    SuiteResult finish() && { return std::move(result_); }

private:
    SuiteResult result_;
};

FreeProblem free_generators() {
    return {FreeElement::generator_l0(), FreeElement::generator_l1(), FreeVector::generator()};
}

SuiteResult t_bar_suite(const VerifyConfig& config) {
    Suite suite("t-bar-recursions");
    for (unsigned long p = 0; p <= config.max_p; ++p) {
        const long expected_next = p % 2 == 0 ? t_bar(p) + 1 : t_bar(p);
        suite.check(t_bar(p + 1) == expected_next, [&] { return "t_bar(" + std::to_string(p + 1) + ") parity rule"; });
        suite.check(t_bar(p + 2) == t_bar(p) + 1, [&] { return "t_bar(" + std::to_string(p + 2) + ") step rule"; });
    }
    return std::move(suite).finish();
}

SuiteResult theorem1_free_suite(const VerifyConfig& config) {
    Suite suite("closed-vs-iterative-free");
    const FreeProblem problem = free_generators();
    for (unsigned long p = 0; p <= config.max_p; ++p) {
        const FreeVector closed = config.free_closed(problem, p);
        const FreeVector iterative = solve_iterative(problem, p);
        suite.check(closed == iterative, [&] {
            return "p = " + std::to_string(p) + "\n  closed:    " + closed.str() + "\n  iterative: " + iterative.str();
        });
    }
    return std::move(suite).finish();
}

SuiteResult induction_step_suite(const VerifyConfig& config) {
    Suite suite("induction-step-free");
    const FreeProblem problem = free_generators();
    for (unsigned long p = 0; p + 2 <= config.max_p; ++p) {
        const FreeVector lhs = problem.l0() * config.free_closed(problem, p) +
                               problem.l1() * config.free_closed(problem, p + 1);
        const FreeVector rhs = config.free_closed(problem, p + 2);
        suite.check(lhs == rhs, [&] {
            return "p = " + std::to_string(p) + "\n  L0*Y_p + L1*Y_{p+1}: " + lhs.str() + "\n  Y_{p+2}:             " +
                   rhs.str();
        });
    }
    return std::move(suite).finish();
}

SuiteResult permsum_free_suite(const VerifyConfig& config) {
    Suite suite("permsum-structure-free");
    const FreeElement a = FreeElement::generator_l0();
    const FreeElement b = FreeElement::generator_l1();
    const unsigned max_len = std::min(config.max_p, 14u);
    for (unsigned n = 0; n <= max_len; ++n) {
        for (unsigned u = 0; u <= n; ++u) {
            const unsigned v = n - u;
            const FreeElement dp = perm_sum_dp(a, b, u, v);
            const auto where = [&] { return "(u, v) = (" + std::to_string(u) + ", " + std::to_string(v) + ")"; };
            suite.check(BigInt(dp.size()) == count_terms(u, v), [&] {
                return where() + ": " + std::to_string(dp.size()) + " monomials, expected " +
                       to_string(count_terms(u, v));
            });
            const bool unit = std::all_of(dp.terms().begin(), dp.terms().end(), [&](const auto& term) {
                return term.second == 1 && term.first.count(Letter::L0) == u && term.first.count(Letter::L1) == v;
            });
            suite.check(unit, [&] { return where() + ": a monomial has the wrong letters or coefficient\n  " + dp.str(); });
            const FreeElement naive = perm_sum_naive(a, b, u, v, {.threads = config.threads});
            suite.check(dp == naive, [&] {
                return where() + "\n  dp:    " + dp.str() + "\n  naive: " + naive.str();
            });
        }
    }
    return std::move(suite).finish();
}

SuiteResult permsum_matrix_suite(const VerifyConfig& config) {
    Suite suite("permsum-dp-vs-naive-matrix");
    std::mt19937_64 rng(config.seed);
    const unsigned max_len = std::min(config.max_p, 10u);
    for (int pair = 0; pair < 20; ++pair) {
        const RationalMatrix l0 = random_rational_matrix(rng, 3);
        const RationalMatrix l1 = random_rational_matrix(rng, 3);
        for (unsigned n = 0; n <= max_len; ++n) {
            for (unsigned u = 0; u <= n; ++u) {
                const RationalMatrix dp = perm_sum_dp(l0, l1, u, n - u);
                const RationalMatrix naive = perm_sum_naive(l0, l1, u, n - u, {.threads = config.threads});
                suite.check(dp == naive, [&] {
                    return "pair " + std::to_string(pair) + ", (u, v) = (" + std::to_string(u) + ", " +
                           std::to_string(n - u) + ")\n  L0:    " + format_element(l0) + "\n  L1:    " +
                           format_element(l1) + "\n  dp:    " + format_element(dp) + "\n  naive: " +
                           format_element(naive);
                });
            }
        }
    }
    return std::move(suite).finish();
}

SuiteResult matrix_oracle_suite(const VerifyConfig& config) {
    Suite suite("closed-vs-iterative-matrix");
    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ull);
    for (unsigned i = 0; i < config.matrix_problems; ++i) {
        const RationalMatrixProblem problem(random_rational_matrix(rng, 3), random_rational_matrix(rng, 3),
                                            random_rational_vector(rng, 3));
        for (unsigned long p = 0; p <= config.max_p; ++p) {
            const RationalVector closed = solve_closed(problem, p);
            const RationalVector iterative = solve_iterative(problem, p);
            suite.check(closed == iterative, [&] {
                return "problem " + std::to_string(i) + ", p = " + std::to_string(p) + "\n" +
                       serialize_problem({problem, std::nullopt}) + "  closed:    " + format_vector(closed) +
                       "\n  iterative: " + format_vector(iterative);
            });
        }
    }
    return std::move(suite).finish();
}

std::string scalar_case(const Rational& c0, const Rational& c1, const Rational& y1, unsigned long p) {
    return "c0 = " + to_string(c0) + ", c1 = " + to_string(c1) + ", y1 = " + to_string(y1) +
           ", p = " + std::to_string(p);
}

SuiteResult scalar_suite(const VerifyConfig& config) {
    Suite suite("scalar-coherence");
    std::mt19937_64 rng(config.seed ^ 0x5851f42d4c957f2dull);
    const unsigned long max_p = std::min(config.max_p, 30u);

    // Rational roots: pick m1, m2 and build c1 = m1 + m2, c0 = -m1 m2.
    for (int i = 0; i < 100; ++i) {
        const Rational m1 = random_nonzero_rational(rng);
        const Rational m2 = random_nonzero_rational(rng);
        const Rational c1 = m1 + m2;
        const Rational c0 = -m1 * m2;
        const Rational y1 = random_nonzero_rational(rng);
        const RationalMatrixProblem one_by_one(RationalMatrix{{c0}}, RationalMatrix{{c1}}, RationalVector{y1});
        const ScalarProblem scalar{Scalar(c0), Scalar(c1), Scalar(y1)};
        for (unsigned long p = 0; p <= max_p; ++p) {
            const ScalarValue roots = solve_scalar_roots(c0, c1, y1, p);
            const Rational sum = solve_scalar_sum(c0, c1, y1, p);
            const Rational iterative = solve_iterative(one_by_one, p)[0];
            const Rational closed = solve_closed(scalar, p).value;
            suite.check(roots.exact() && roots.rational() == sum && sum == iterative && closed == sum, [&] {
                return scalar_case(c0, c1, y1, p) + "\n  roots: " +
                       (roots.exact() ? to_string(roots.rational()) : std::to_string(roots.approx())) +
                       "\n  sum: " + to_string(sum) + "\n  iterative: " + to_string(iterative) +
                       "\n  closed: " + to_string(closed);
            });
        }
    }

    // Complex-conjugate roots: c1^2 + 4 c0 < 0.
    for (int i = 0; i < 20; ++i) {
        const Rational c1 = random_nonzero_rational(rng);
        const Rational c0 = -(c1 * c1) / 4 - Rational(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 4));
        const Rational y1 = random_nonzero_rational(rng);
        for (unsigned long p = 0; p <= max_p; ++p) {
            const double approx = solve_scalar_roots(c0, c1, y1, p).approx();
            const double exact = solve_scalar_sum(c0, c1, y1, p).get_d();
            const bool close = std::abs(approx - exact) <= std::max(1e-9 * std::abs(exact), 1e-12);
            suite.check(close, [&] {
                return scalar_case(c0, c1, y1, p) + "\n  complex: " + std::to_string(approx) +
                       "\n  exact:   " + std::to_string(exact);
            });
        }
    }

    // Repeated root: c0 = -c1^2 / 4.
    for (const Rational& c1 : {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3),
                               Rational(4, 3)}) {
        const Rational c0 = -(c1 * c1) / 4;
        const Rational m1 = c1 / 2;
        const Rational y1(3, 2);
        const RationalMatrixProblem one_by_one(RationalMatrix{{c0}}, RationalMatrix{{c1}}, RationalVector{y1});
        for (unsigned long p = 0; p <= max_p; ++p) {
            const ScalarValue roots = solve_scalar_roots(c0, c1, y1, p);
            const Rational expected = p == 0 ? Rational(0) : Rational(Rational(p) * pow(m1, p - 1) * y1);
            suite.check(roots.exact() && roots.rational() == expected &&
                            expected == solve_iterative(one_by_one, p)[0] &&
                            expected == solve_scalar_sum(c0, c1, y1, p),
                        [&] { return scalar_case(c0, c1, y1, p) + ": repeated-root branch disagrees"; });
        }
    }
    return std::move(suite).finish();
}

SuiteResult identity_suite() {
    Suite suite("binomial-identities");
    for (long n = 0; n <= 40; ++n)
        for (long k = -1; k <= n; ++k)
            suite.check(stifel_check(n, k),
                        [&] { return "Pascal's rule fails at n = " + std::to_string(n) + ", k = " + std::to_string(k); });
    for (unsigned long p = 0; p <= 40; ++p)
        suite.check(verify_binomial_symmetry(p), [&] { return "binomial symmetry fails at p = " + std::to_string(p); });
    for (unsigned long n = 0; n <= 30; ++n)
        suite.check(verify_identity_23(n), [&] { return "(-1/4)^k sum fails at n = " + std::to_string(n); });
    for (long z : {0, 2, 6, 12, 20})
        for (unsigned long n = 0; n <= 20; ++n)
            suite.check(verify_identity_21(Rational(z), n), [&] {
                return "z^k sum fails at z = " + std::to_string(z) + ", n = " + std::to_string(n);
            });
    return std::move(suite).finish();
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyConfig& config) {
    std::vector<SuiteResult> results;
    results.push_back(t_bar_suite(config));
    results.push_back(theorem1_free_suite(config));
    results.push_back(induction_step_suite(config));
    results.push_back(permsum_free_suite(config));
    results.push_back(permsum_matrix_suite(config));
    results.push_back(matrix_oracle_suite(config));
    results.push_back(scalar_suite(config));
    results.push_back(identity_suite());
    return results;
}

}  // namespace noncomm
