#pragma once

#include <string>
#include <vector>

#include "padiff/fq.hpp"
#include "padiff/rational.hpp"

namespace padiff {

/// Element of the cyclotomic field Q(zeta_N), stored as the canonical
/// polynomial in zeta_N of degree < phi(N) (remainder mod the N-th
/// cyclotomic polynomial).  Equal values always have identical vectors.
/// Mixed-conductor arithmetic lifts both operands to the lcm.
class Cyclotomic {
 public:
  explicit Cyclotomic(long conductor);  // zero
  static Cyclotomic zero(long conductor);
  static Cyclotomic one(long conductor);
  static Cyclotomic from_rational(long conductor, const Rational& value);
  static Cyclotomic zeta(long conductor);
  static Cyclotomic zeta_pow(long conductor, long e);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  /// Rewrites the value in Q(zeta_M); N must divide M.
  Cyclotomic lift(long new_conductor) const;

  /// Complex conjugation, zeta -> zeta^(-1).  An involution.
  Cyclotomic conj() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  bool operator==(const Cyclotomic& o) const;

  std::string to_string() const;  // symbolic, e.g. "1 - z3 + 2*z3^2"

 private:
  long conductor_;
  std::vector<Rational> c_;  // size phi(conductor)
};

long euler_phi(long n);

/// Coefficients of the N-th cyclotomic polynomial (integer, monic).
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

/// The fixed additive character psi = zeta_p o Tr : F_q -> Q(zeta_p)^x.
/// Nontrivial because the trace is surjective.
Cyclotomic psi_value(const FqField& field, long alpha);

}  // namespace padiff
