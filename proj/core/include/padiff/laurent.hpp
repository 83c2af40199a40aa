#pragma once

#include <map>
#include <optional>
#include <string>

#include "padiff/pi_scalar.hpp"
#include "padiff/piecewise.hpp"

namespace padiff {

/// Certified bound on omitted high-order terms: every omitted x^i with
/// i >= from has coefficient valuation >= vp_min.
struct TailBound {
  long from;
  Rational vp_min;
  bool operator==(const TailBound& o) const { return from == o.from && vp_min == o.vp_min; }
};

/// Laurent polynomial over Q(pi), optionally carrying a tail bound.  No zero
/// coefficients are stored; if a tail is present, `from` exceeds every stored
/// exponent, so the least stored exponent is the true x-adic valuation.
class LaurentElement {
 public:
  explicit LaurentElement(long p);  // zero
  LaurentElement(long p, std::map<long, PiScalar> terms,
                 std::optional<TailBound> tail = std::nullopt);

  static LaurentElement zero(long p);
  static LaurentElement one(long p);
  static LaurentElement x(long p);
  static LaurentElement monomial(long p, long exp, PiScalar coeff);
  static LaurentElement constant(long p, const Rational& value);

  long prime() const { return p_; }
  const std::map<long, PiScalar>& terms() const { return terms_; }
  const std::optional<TailBound>& tail() const { return tail_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_tail_free() const { return !tail_.has_value(); }

  /// Least exponent with nonzero coefficient.  Throws on zero input.
  long ord_x() const;

  /// Leading coefficient (at ord_x).
  const PiScalar& leading_coeff() const;

  PiScalar coeff(long exp) const;  // zero scalar if absent

  /// Termwise d/dx.  A tail bound survives as (from-1, same vp_min): the
  /// exponent factor is an integer, whose valuation is >= 0.
  LaurentElement derive() const;

  /// Multiplication by x^k.
  LaurentElement shifted(long k) const;

  LaurentElement operator-() const;
  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b);
  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  bool operator==(const LaurentElement& o) const;

  LaurentElement scaled(const PiScalar& c) const;

  std::string to_string() const;

 private:
  long p_;
  std::map<long, PiScalar> terms_;
  std::optional<TailBound> tail_;
};

/// Exact product; tail bounds combine conservatively.
LaurentElement lmul(const LaurentElement& a, const LaurentElement& b);

/// Result of the Gauss-valuation computation: the function itself plus the
/// left end of the interval on which a tail bound certifies it ((0, inf)
/// for tail-free inputs, encoded as certified_from = 0).
struct GaussEnvelope {
  PiecewiseAffine envelope;
  Rational certified_from;
  bool certified_everywhere() const { return certified_from == 0; }
};

/// The rho-Gauss valuation as a function of s = -log_p(rho): the lower
/// envelope of vp(b_i) + i*s over the stored terms, on s in (0, inf).
/// Concave, exact.  Throws on zero input.
GaussEnvelope gauss_envelope(const LaurentElement& f);

/// Least s* >= 0 such that the envelope equals the leading-term line
/// vp(b_m) + m*s for all s >= s* (ties included).  Errors when a tail
/// leaves part of [s*, inf) uncertified.
Rational dominance_threshold(const LaurentElement& f);

/// Exact quotient f / g in the Laurent polynomial ring, when it exists.
/// Tail-free inputs only.
std::optional<LaurentElement> try_divide(const LaurentElement& f, const LaurentElement& g);

}  // namespace padiff
