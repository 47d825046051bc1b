#include "noncomm/error.hpp"
#include "noncomm/free_algebra.hpp"
#include "noncomm/matrix.hpp"
#include "noncomm/random.hpp"
#include "noncomm/scalar.hpp"
#include "noncomm/scalar_solver.hpp"
#include "noncomm/solver.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace noncomm;

namespace {

using FreeProblem = CauchyProblem<FreeElement, FreeVector>;
using MatrixProblem = CauchyProblem<RationalMatrix, RationalVector>;
using ScalarCauchy = CauchyProblem<Scalar, Scalar>;

const FreeProblem generators{FreeElement::generator_l0(), FreeElement::generator_l1(), FreeVector::generator()};

FreeVector free_vector(const char* text) { return FreeVector::parse(text); }

}  // namespace

TEST_CASE("t_bar") {
    CHECK(t_bar(2) == 0);
    CHECK(t_bar(6) == 2);
    CHECK(t_bar(0) == -1);
    CHECK(t_bar(1) == 0);
    CHECK(t_bar(7) == 3);
    for (unsigned long p = 2; p <= 100; ++p) CHECK(t_bar(p) == (p % 2 == 0 ? (p - 2) / 2 : (p - 1) / 2));
}

TEST_CASE("t_bar step rules") {
    for (unsigned long p = 0; p <= 200; ++p) {
        CHECK(t_bar(p + 1) == (p % 2 == 0 ? t_bar(p) + 1 : t_bar(p)));
        CHECK(t_bar(p + 2) == t_bar(p) + 1);
    }
}

TEST_CASE("solve_iterative") {
    CHECK(solve_iterative(generators, 0) == FreeVector{});
    const ScalarCauchy fib{Scalar(1), Scalar(1), Scalar(1)};
    CHECK(solve_iterative(fib, 10) == Scalar(55));
    CHECK(solve_iterative(generators, 3) == free_vector("A*y1 + BB*y1"));
    CHECK(solve_iterative(generators, 1) == FreeVector::generator());
}

TEST_CASE("solve_closed") {
    CHECK(solve_closed(generators, 0) == FreeVector{});
    CHECK(solve_closed(generators, 1) == FreeVector::generator());
    CHECK(solve_closed(generators, 2) == free_vector("B*y1"));
    CHECK(solve_closed(generators, 3) == free_vector("A*y1 + BB*y1"));
    CHECK(solve_closed(generators, 3) == solve_iterative(generators, 3));

    std::mt19937_64 rng(1);
    const MatrixProblem m(random_rational_matrix(rng, 3), random_rational_matrix(rng, 3), random_rational_vector(rng, 3));
    CHECK(solve_closed(m, 0) == RationalVector(3));
    CHECK(solve_closed(m, 1) == m.y1());
    CHECK(solve_closed(m, 2) == m.l1() * m.y1());
}

TEST_CASE("Cauchy problems reject mismatched dimensions") {
    CHECK_THROWS_AS(MatrixProblem(RationalMatrix(2), RationalMatrix(2), RationalVector(3)), Error);
    CHECK_THROWS_AS(MatrixProblem(RationalMatrix(2), RationalMatrix(3), RationalVector(2)), Error);
}

TEST_CASE("closed form equals iteration symbolically for p <= 16") {
    for (unsigned long p = 0; p <= 16; ++p) {
        CAPTURE(p);
        CHECK(solve_closed(generators, p) == solve_iterative(generators, p));
    }
}

TEST_CASE("closed form term structure on free generators") {
    // Y_p holds every word with t A's and p-1-2t B's exactly once.
    for (unsigned long p = 1; p <= 14; ++p) {
        const FreeVector solved = solve_closed(generators, p);
        const FreeElement& y = solved.combination();
        BigInt expected = 0;
        for (long t = 0; t <= t_bar(p); ++t) expected += count_terms(static_cast<unsigned>(t), static_cast<unsigned>(p - 1 - 2 * t));
        CHECK(BigInt(y.size()) == expected);
        for (const auto& [word, c] : y.terms()) {
            CHECK(c == 1);
            CHECK(2 * word.count(Letter::L0) + word.count(Letter::L1) == p - 1);
        }
    }
}

TEST_CASE("induction step L0*Y_p + L1*Y_{p+1} == Y_{p+2}") {
    for (unsigned long p = 0; p <= 12; ++p) {
        const FreeVector lhs =
            generators.l0() * solve_closed(generators, p) + generators.l1() * solve_closed(generators, p + 1);
        CHECK(lhs == solve_closed(generators, p + 2));
    }
}

TEST_CASE("closed form equals iteration on random rational matrices") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
        const MatrixProblem m(random_rational_matrix(rng, 3), random_rational_matrix(rng, 3),
                              random_rational_vector(rng, 3));
        for (unsigned long p = 0; p <= 25; ++p) CHECK(solve_closed(m, p) == solve_iterative(m, p));
    }
}

TEST_CASE("closed form equals iteration on float matrices within tolerance") {
    std::mt19937_64 rng(78);
    for (int i = 0; i < 10; ++i) {
        const CauchyProblem<FloatMatrix, FloatVector> m(random_float_matrix(rng, 4), random_float_matrix(rng, 4),
                                                       random_float_vector(rng, 4));
        for (unsigned long p = 0; p <= 20; ++p) CHECK(solve_closed(m, p) == solve_iterative(m, p));
    }
}

TEST_CASE("closed-form multiplication count grows quadratically in p") {
    MultCounter counter;
    (void)solve_closed(generators, 16, &counter);
    // Staircase with rows of length 15, 13, ..., 1: at most 2 products per cell.
    std::uint64_t cells = 0;
    for (long t = 0; t <= t_bar(16); ++t) cells += static_cast<std::uint64_t>(16 - 1 - 2 * t) + 1;
    CHECK(counter.multiplications() <= 2 * cells);
    CHECK(counter.multiplications() > 0);
}

TEST_CASE("characteristic_roots") {
    const ScalarRoots r = characteristic_roots(2, 1);
    CHECK(r.delta == 9);
    REQUIRE(r.exact());
    CHECK(r.exact_roots().m1 == 2);
    CHECK(r.exact_roots().m2 == -1);

    const ScalarRoots d = characteristic_roots(-1, 2);
    CHECK(d.delta == 0);
    REQUIRE(d.exact());
    CHECK(d.exact_roots().m1 == 1);
    CHECK(d.exact_roots().m2 == 1);

    const ScalarRoots g = characteristic_roots(1, 1);
    CHECK(g.delta == 5);
    REQUIRE_FALSE(g.exact());
    CHECK(g.approx_roots().m1.real() == doctest::Approx(1.6180339887).epsilon(1e-10));
    CHECK(g.approx_roots().m2.real() == doctest::Approx(-0.6180339887).epsilon(1e-9));

    try {
        (void)characteristic_roots(0, 3);
        FAIL("c0 = 0 must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("root sums and products match the coefficients") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const Rational c0 = random_nonzero_rational(rng, 9, 5);
        const Rational c1 = random_rational(rng, 9, 5);
        const ScalarRoots r = characteristic_roots(c0, c1);
        if (r.exact()) {
            CHECK(r.exact_roots().m1 + r.exact_roots().m2 == c1);
            CHECK(r.exact_roots().m1 * r.exact_roots().m2 == -c0);
        } else {
            const auto& [m1, m2] = r.approx_roots();
            const double scale = std::max({std::abs(c0.get_d()), std::abs(c1.get_d()), 1.0});
            CHECK(std::abs(m1 + m2 - c1.get_d()) <= 1e-9 * scale);
            CHECK(std::abs(m1 * m2 + c0.get_d()) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("solve_scalar_roots") {
    CHECK(solve_scalar_roots(2, 1, 1, 3).rational() == 3);
    CHECK(solve_scalar_roots(-1, 2, 1, 7).rational() == 7);
    CHECK(testing::scalar_recurrence(-1, 2, 1, 7) == 7);
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const Rational c0 = random_nonzero_rational(rng);
        const Rational c1 = random_rational(rng);
        const Rational y1 = random_rational(rng);
        CHECK(solve_scalar_roots(c0, c1, y1, 1).approx() == doctest::Approx(y1.get_d()));
        CHECK(solve_scalar_roots(c0, c1, y1, 0).approx() == 0.0);
    }
    CHECK(solve_scalar_roots(1, 1, 1, 30).approx() == doctest::Approx(832040).epsilon(1e-12));
    CHECK_THROWS_AS(solve_scalar_roots(0, 1, 1, 3), Error);
}

TEST_CASE("solve_scalar_roots stays real for complex roots") {
    // c1 = 0, c0 = -1: y_p = 0, 1, 0, -1, 0, 1, ...
    for (unsigned long p = 0; p < 12; ++p) {
        const double expected = testing::scalar_recurrence(-1, 0, 1, p).get_d();
        CHECK(solve_scalar_roots(-1, 0, 1, p).approx() == doctest::Approx(expected));
    }
    // c1 = 1, c0 = -1 gives roots on the unit circle at +-60 degrees.
    for (unsigned long p = 0; p < 20; ++p) {
        const double expected = testing::scalar_recurrence(-1, 1, 1, p).get_d();
        const double got = solve_scalar_roots(-1, 1, 1, p).approx();
        CHECK(std::abs(got - expected) <= 1e-12);
    }
}

TEST_CASE("solve_scalar_sum") {
    CHECK(solve_scalar_sum(1, 1, 1, 10) == 55);
    CHECK(solve_scalar_sum(4, 0, 1, 5) == 16);
    CHECK(solve_scalar_sum(2, 1, 1, 3) == 3);
    CHECK(solve_scalar_sum(1, 1, 1, 30) == 832040);
    CHECK(solve_scalar_sum(0, 0, 5, 1) == 5);
    CHECK(solve_scalar_sum(0, 0, 5, 2) == 0);
    CHECK(solve_scalar_sum(0, 3, 1, 4) == 27);
}

TEST_CASE("scalar sum equals the recurrence, including zero coefficients") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const Rational c0 = i % 10 == 0 ? Rational(0) : random_rational(rng);
        const Rational c1 = i % 7 == 0 ? Rational(0) : random_rational(rng);
        const Rational y1 = random_rational(rng);
        const CauchyProblem<RationalMatrix, RationalVector> one(RationalMatrix{{c0}}, RationalMatrix{{c1}},
                                                                RationalVector{y1});
        const ScalarCauchy scalar{Scalar(c0), Scalar(c1), Scalar(y1)};
        for (unsigned long p = 0; p <= 30; ++p) {
            const Rational sum = solve_scalar_sum(c0, c1, y1, p);
            CHECK(sum == testing::scalar_recurrence(c0, c1, y1, p));
            CHECK(sum == solve_iterative(one, p)[0]);
            CHECK(sum == solve_closed(scalar, p).value);
            if (c0 != 0) {
                const ScalarValue roots = solve_scalar_roots(c0, c1, y1, p);
                if (roots.exact()) CHECK(roots.rational() == sum);
            }
        }
    }
}

TEST_CASE("repeated-root branch equals the sum exactly") {
    for (const Rational& c1 : {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3),
                               Rational(4, 3), Rational(-7, 5)}) {
        const Rational c0 = -(c1 * c1) / 4;
        for (unsigned long p = 0; p <= 30; ++p) {
            const ScalarValue v = solve_scalar_roots(c0, c1, Rational(2, 3), p);
            REQUIRE(v.exact());
            CHECK(v.rational() == solve_scalar_sum(c0, c1, Rational(2, 3), p));
        }
    }
}

TEST_CASE("verify_identity_21") {
    // z = 2, n = 3: 1 + 2*2 = 5 on the left; (4^4 - (-2)^4) / (16 * 3) = 5 on the right.
    CHECK(testing::pascal_triangle(3)[3][0] + testing::pascal_triangle(2)[2][1] * 2 == 5);
    CHECK(verify_identity_21(2, 3));
    for (unsigned long n = 0; n <= 20; ++n) CHECK(verify_identity_21(0, n));
    // z = 6, n = 2: 1 + 6 = 7; (6^3 - (-4)^3) / (8 * 5) = 7.
    CHECK(verify_identity_21(6, 2));
    CHECK(verify_identity_21(Rational(3, 4), 9));    // 1 + 4z = 4
    CHECK(verify_identity_21(Rational(-2, 9), 11));  // 1 + 4z = 1/9
    CHECK_THROWS_AS(verify_identity_21(1, 3), Error);
    CHECK_THROWS_AS(verify_identity_21(Rational(-1, 4), 3), Error);
}

TEST_CASE("verify_identity_23") {
    CHECK(verify_identity_23(0));
    CHECK(verify_identity_23(2));
    CHECK(verify_identity_23(4));
    for (unsigned long n = 0; n <= 30; ++n) CHECK(verify_identity_23(n));
}

TEST_CASE("binomial symmetry inside the scalar sum") {
    for (unsigned long p = 0; p <= 40; ++p) CHECK(verify_binomial_symmetry(p));
}
