#pragma once

#include "noncomm/rational.hpp"

#include <complex>
#include <variant>

namespace noncomm {

/// Roots of m^2 - c1 m - c0 = 0. m1 takes the + branch of (c1 +- sqrt(delta)) / 2.
struct ScalarRoots {
    struct Exact {
        Rational m1;
        Rational m2;
    };
    struct Approx {
        std::complex<double> m1;
        std::complex<double> m2;
    };

    Rational c0;
    Rational c1;
    Rational delta;
    std::variant<Exact, Approx> roots;

    bool exact() const noexcept { return std::holds_alternative<Exact>(roots); }
    const Exact& exact_roots() const { return std::get<Exact>(roots); }
    const Approx& approx_roots() const { return std::get<Approx>(roots); }
};

/// Throws Error(Domain) when c0 == 0.
ScalarRoots characteristic_roots(const Rational& c0, const Rational& c1);

/// Either an exact rational or a double that was recovered from complex arithmetic.
struct ScalarValue {
    std::variant<Rational, double> value;

    bool exact() const noexcept { return std::holds_alternative<Rational>(value); }
    const Rational& rational() const { return std::get<Rational>(value); }
    double approx() const;
};

/// Closed form through the characteristic roots:
///   (m1^p - m2^p) / (m1 - m2) * y1   when delta != 0,
///   p m1^(p-1) y1                      when delta == 0.
/// Exact when the roots are rational; otherwise evaluated in complex doubles and
/// Error(Numerical) is thrown unless the imaginary part cancels to 1e-9 relative.
ScalarValue solve_scalar_roots(const Rational& c0, const Rational& c1, const Rational& y1, unsigned long p);
ScalarValue solve_scalar_roots(const ScalarRoots& roots, const Rational& y1, unsigned long p);

/// sum_{t=0}^{t_bar(p)} C(p-t-1, t) c0^t c1^(p-1-2t) y1, with 0^0 = 1.
Rational solve_scalar_sum(const Rational& c0, const Rational& c1, const Rational& y1, unsigned long p);

/// sum_{k=0}^{n/2} C(n-k, k) z^k == 2^(-n-1) (1+4z)^(-1/2) [(1+s)^(n+1) - (1-s)^(n+1)], s = sqrt(1+4z).
/// Throws Error(Domain) unless 1 + 4z is the square of a nonzero rational.
bool verify_identity_21(const Rational& z, unsigned long n);

/// sum_{k=0}^{n/2} (-1/4)^k C(n-k, k) == (n + 1) 2^(-n).
bool verify_identity_23(unsigned long n);

/// C(p-t-1, t) == C(p-t-1, p-1-2t) for every 0 <= t <= t_bar(p).
bool verify_binomial_symmetry(unsigned long p);

}  // namespace noncomm
