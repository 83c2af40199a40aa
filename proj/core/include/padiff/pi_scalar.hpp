#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiff/rational.hpp"

namespace padiff {

/// Element of Q(pi) = Q[pi]/(pi^(p-1) + p), the coefficient field for all
/// operators here.  Stored as the p-1 rational coordinates in the basis
/// 1, pi, ..., pi^(p-2).  For p = 2 this is a plain rational with pi = -2.
///
/// The monomials q_k pi^k have pairwise distinct valuations mod 1, so the
/// p-adic valuation of a sum is the exact minimum of the monomial valuations.
class PiScalar {
 public:
  explicit PiScalar(long p);  // zero
  PiScalar(long p, std::vector<Rational> coeffs);

  static PiScalar zero(long p);
  static PiScalar one(long p);
  static PiScalar pi(long p);
  static PiScalar from_rational(long p, const Rational& value);
  static PiScalar from_long(long p, long value);

  long prime() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  PiScalar operator-() const;
  PiScalar& operator+=(const PiScalar& o);
  PiScalar& operator-=(const PiScalar& o);
  PiScalar& operator*=(const PiScalar& o);
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
  bool operator==(const PiScalar& o) const;

  PiScalar inverse() const;  // throws precondition_error on zero
  PiScalar pow(long e) const;

  /// v_p, with v_p(pi) = 1/(p-1).  nullopt encodes +infinity (zero).
  std::optional<Rational> vp() const;

  std::string to_string() const;

 private:
  void check_compatible(const PiScalar& o) const;
  long p_;
  std::vector<Rational> c_;  // size p-1
};

/// v_p(omega) = 1/(p-1), shorthand used throughout the radius formulas.
Rational omega_val(long p);

}  // namespace padiff
