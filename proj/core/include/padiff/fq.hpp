#pragma once

#include <string>
#include <vector>

namespace padiff {

/// The finite field F_q, q = p^a, with elements encoded as integers in
/// [0, q): the code's base-p digits are the coordinates of the element in
/// the basis 1, g, ..., g^(a-1), where g is a root of the modulus.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree a over F_p (coefficient vectors compared as base-p numbers,
/// constant digit least significant), so all outputs are reproducible.
class FqField {
 public:
  FqField(long p, long a);

  long p() const { return p_; }
  long a() const { return a_; }
  long q() const { return q_; }

  /// Modulus coefficients c_0..c_a (monic: c_a = 1).
  const std::vector<long>& modulus() const { return modulus_; }

  long add(long x, long y) const;
  long sub(long x, long y) const;
  long neg(long x) const;
  long mul(long x, long y) const;
  long inv(long x) const;  // throws on zero
  long pow(long x, long e) const;

  /// Multiply by an element of the prime field (integer mod p).
  long scalar_mul(long c, long x) const;

  /// Trace to F_p, returned as an integer in [0, p).
  long trace(long x) const;

  /// The least multiplicative generator of F_q^x.
  long generator() const { return generator_; }

  /// An element of exact multiplicative order n; n must divide q-1.
  long element_of_order(long n) const;

  long element_order(long x) const;

  std::string elem_str(long code) const;  // polynomial in "g"

 private:
  long p_, a_, q_;
  std::vector<long> modulus_;
  std::vector<std::vector<long>> mul_table_;
  long generator_;
};

/// Factors q as p^a with p prime; throws if q is not a prime power.
std::pair<long, long> prime_power_split(long q);

/// Multiplicative order of p modulo n (requires gcd(p, n) = 1; order mod 1 is 1).
long multiplicative_order(long p, long n);

bool is_prime(long n);

}  // namespace padiff
