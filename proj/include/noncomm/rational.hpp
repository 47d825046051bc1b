#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace noncomm {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" with decimal digits only; the result is canonical.
/// Throws Error(Parse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// value^exponent with 0^0 = 1.
Rational pow(const Rational& base, unsigned long exponent);

/// The nonnegative rational r with r*r == value, if one exists.
std::optional<Rational> rational_sqrt(const Rational& value);

/// C(n, k), zero when k < 0 or k > n (and for n < 0).
BigInt binomial(long n, long k);

}  // namespace noncomm
