#pragma once

#include "noncomm/rational.hpp"

#include <ostream>

namespace noncomm {

/// Exact rational scalar; serves as both ring element and module vector of the
/// commutative backend.
struct Scalar {
    Rational value{0};

    Scalar() = default;
    Scalar(Rational v) : value(std::move(v)) {}
    Scalar(long v) : value(v) {}

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar{Rational(a.value + b.value)}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar{Rational(a.value * b.value)}; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value == b.value; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s.value); }
};

inline Scalar zero_like(const Scalar&) { return Scalar{}; }
inline Scalar identity_like(const Scalar&) { return Scalar{1}; }
inline bool compatible(const Scalar&, const Scalar&) { return true; }

}  // namespace noncomm
