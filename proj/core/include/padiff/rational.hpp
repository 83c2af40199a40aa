#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace padiff {

// All slope, valuation and jump values live in exact rational arithmetic.
using Rational = mpq_class;

/// Canonicalized rational n/d.  d must be nonzero.
Rational rat(long num, long den = 1);

/// Parses "n" or "n/d" with optional sign.  Throws parse_error.
Rational parse_rational(const std::string& text);

/// Renders as "n" or "n/d" in lowest terms.
std::string to_string(const Rational& q);

/// p-adic valuation of a rational.  nullopt encodes +infinity (the zero value).
std::optional<Rational> padic_val(const Rational& q, long p);

/// q^e for integer e (e < 0 requires q != 0).
Rational rat_pow(const Rational& q, long e);

Rational rat_abs(const Rational& q);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);

bool is_integer(const Rational& q);

/// Floor of a rational as an integer rational.
Rational rat_floor(const Rational& q);

/// Decimal rendering with the given number of significant digits
/// (round half away from zero).  Presentation only; never parsed back.
std::string decimal_string(const Rational& q, int significant_digits);

}  // namespace padiff
