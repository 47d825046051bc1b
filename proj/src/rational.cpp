#include "noncomm/rational.hpp"

#include "noncomm/error.hpp"

#include <cctype>

namespace noncomm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::BackendMismatch: return "backend-mismatch";
        case ErrorKind::CapExceeded: return "cap-exceeded";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Numerical: return "numerical";
    }
    return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\" (expected p or p/q)");

    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Parse, "rational \"" + std::string(text) + "\" has a zero denominator");
    if (text.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational pow(const Rational& base, unsigned long exponent) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of a canonical fraction stay canonical.
    return Rational(num, den);
}

std::optional<Rational> rational_sqrt(const Rational& value) {
    if (sgn(value) < 0) return std::nullopt;
    const BigInt& num = value.get_num();
    const BigInt& den = value.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    return Rational(sqrt(num), sqrt(den));
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace noncomm
