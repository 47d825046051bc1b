#include "noncomm/scalar_solver.hpp"

#include "noncomm/error.hpp"
#include "noncomm/solver.hpp"

#include <cmath>

namespace noncomm {

namespace {

constexpr double imaginary_tolerance = 1e-9;

void require_nonzero_c0(const Rational& c0) {
    if (c0 == 0)
        throw Error(ErrorKind::Domain, "characteristic roots require c0 != 0");
}

std::complex<double> ipow(std::complex<double> base, unsigned long exponent) {
    std::complex<double> out{1.0, 0.0};
    while (exponent > 0) {
        if (exponent & 1u) out *= base;
        base *= base;
        exponent >>= 1;
    }
    return out;
}

}  // namespace

double ScalarValue::approx() const {
    if (const auto* r = std::get_if<Rational>(&value)) return r->get_d();
    return std::get<double>(value);
}

ScalarRoots characteristic_roots(const Rational& c0, const Rational& c1) {
    require_nonzero_c0(c0);
    ScalarRoots out{c0, c1, Rational(c1 * c1 + 4 * c0), ScalarRoots::Exact{}};
    if (const auto root = rational_sqrt(out.delta)) {
        out.roots = ScalarRoots::Exact{Rational((c1 + *root) / 2), Rational((c1 - *root) / 2)};
    } else {
        const std::complex<double> s = std::sqrt(std::complex<double>(out.delta.get_d(), 0.0));
        const double b = c1.get_d();
        out.roots = ScalarRoots::Approx{(b + s) / 2.0, (b - s) / 2.0};
    }
    return out;
}

ScalarValue solve_scalar_roots(const Rational& c0, const Rational& c1, const Rational& y1, unsigned long p) {
    return solve_scalar_roots(characteristic_roots(c0, c1), y1, p);
}

ScalarValue solve_scalar_roots(const ScalarRoots& roots, const Rational& y1, unsigned long p) {
    if (roots.exact()) {
        const auto& [m1, m2] = roots.exact_roots();
        if (p == 0) return {Rational(0)};
        if (roots.delta == 0) return {Rational(Rational(p) * pow(m1, p - 1) * y1)};
        return {Rational((pow(m1, p) - pow(m2, p)) / (m1 - m2) * y1)};
    }

    // Irrational or complex roots: delta != 0 here, since 0 is a rational square.
    const auto& [m1, m2] = roots.approx_roots();
    const double y = y1.get_d();
    const std::complex<double> a = ipow(m1, p);
    const std::complex<double> b = ipow(m2, p);
    const std::complex<double> gap = m1 - m2;
    const std::complex<double> result = (a - b) / gap * y;
    // Cancellation error is proportional to the size of the subtracted powers.
    const double scale = (std::abs(a) + std::abs(b)) / std::abs(gap) * std::abs(y);
    if (std::abs(result.imag()) > imaginary_tolerance * std::max(std::abs(result.real()), scale))
        throw Error(ErrorKind::Numerical, "complex evaluation left an imaginary part of " +
                                              std::to_string(result.imag()) + " at p = " + std::to_string(p));
    return {result.real()};
}

Rational solve_scalar_sum(const Rational& c0, const Rational& c1, const Rational& y1, unsigned long p) {
    Rational total = 0;
    const long top = t_bar(p);
    for (long t = 0; t <= top; ++t) {
        const long rest = static_cast<long>(p) - 1 - 2 * t;
        total += Rational(binomial(static_cast<long>(p) - t - 1, t)) * pow(c0, static_cast<unsigned long>(t)) *
                 pow(c1, static_cast<unsigned long>(rest));
    }
    return Rational(total * y1);
}

bool verify_identity_21(const Rational& z, unsigned long n) {
    const Rational disc = 1 + 4 * z;
    const auto root = rational_sqrt(disc);
    if (!root || *root == 0)
        throw Error(ErrorKind::Domain, "identity check needs 1 + 4z to be the square of a nonzero rational, got " +
                                           to_string(disc));
    const Rational& s = *root;

    Rational lhs = 0;
    for (unsigned long k = 0; k <= n / 2; ++k)
        lhs += Rational(binomial(static_cast<long>(n - k), static_cast<long>(k))) * pow(z, k);

    const Rational bracket = pow(Rational(1 + s), n + 1) - pow(Rational(1 - s), n + 1);
    const Rational rhs = bracket / (pow(Rational(2), n + 1) * s);
    return lhs == rhs;
}

bool verify_identity_23(unsigned long n) {
    const Rational quarter(-1, 4);
    Rational lhs = 0;
    for (unsigned long k = 0; k <= n / 2; ++k)
        lhs += Rational(binomial(static_cast<long>(n - k), static_cast<long>(k))) * pow(quarter, k);
    const Rational rhs = Rational(n + 1) / pow(Rational(2), n);
    return lhs == rhs;
}

bool verify_binomial_symmetry(unsigned long p) {
    const long top = t_bar(p);
    const auto q = static_cast<long>(p);
    for (long t = 0; t <= top; ++t)
        if (binomial(q - t - 1, t) != binomial(q - t - 1, q - 1 - 2 * t)) return false;
    return true;
}

}  // namespace noncomm
