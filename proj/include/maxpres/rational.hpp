#pragma once

// Exact rational arithmetic backed by GMP, plus the handful of helpers the
// function algebra needs (parsing "p/q", integer powers, exact roots).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxpres {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Parses "p/q", "-p/q" or an integer string into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers render without a denominator.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` significant fractional digits. Approximate.
std::string to_decimal(const Rational& q, int digits);

Rational pow(const Rational& base, unsigned long exponent);

/// Exact k-th root, if the rational has one.
std::optional<Rational> exact_root(const Rational& q, unsigned long k);

/// q^(num/den) for q >= 0 and num/den > 0, when the result is rational.
std::optional<Rational> rational_power(const Rational& q, const Rational& exponent);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// 2^k as a rational, negative k allowed.
Rational power_of_two(int k);

}  // namespace maxpres
