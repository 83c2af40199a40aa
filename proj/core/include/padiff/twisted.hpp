#pragma once

#include <cstdint>
#include <vector>

#include "padiff/laurent.hpp"

namespace padiff {

/// Twisted polynomial sum a_i T^i over Laurent elements, with the Ore
/// relation T*a = a*T + d(a) for d = d/dx.  Coefficients are indexed by
/// T-power; leading zeros are trimmed.
class TwistedOperator {
 public:
  TwistedOperator(long p, std::vector<LaurentElement> coefficients);

  static TwistedOperator zero(long p);

  long prime() const { return p_; }
  long degree() const { return static_cast<long>(coeff_.size()) - 1; }
  const LaurentElement& coeff(long i) const;
  const std::vector<LaurentElement>& coeffs() const { return coeff_; }

  bool is_zero() const { return coeff_.empty(); }
  bool is_monic() const;

  /// Throws precondition_error unless monic of degree >= 1.
  void require_monic_nonconstant(const char* op_name) const;

  TwistedOperator operator-() const;
  friend TwistedOperator operator+(const TwistedOperator& a, const TwistedOperator& b);
  friend TwistedOperator operator-(const TwistedOperator& a, const TwistedOperator& b);
  bool operator==(const TwistedOperator& o) const;

 private:
  long p_;
  std::vector<LaurentElement> coeff_;
};

/// Ore product.  Degrees add; leading coefficients multiply.
TwistedOperator tmul(const TwistedOperator& u, const TwistedOperator& v);

/// Left multiplication by a scalar function.
TwistedOperator scalar_mul(const LaurentElement& a, const TwistedOperator& u);

/// Converts sum c_k theta^k (theta = x*T, monic in theta) into monic T-form
/// by Ore expansion and left division by x^n.
TwistedOperator expand_theta(long p, const std::vector<LaurentElement>& theta_coeffs);

/// First-order system D(e_i) = sum_j A[i][j] e_j (row convention), either
/// for D = d/dx or for D = x*d/dx.
struct SystemMatrix {
  long p;
  bool theta_form;
  std::vector<std::vector<LaurentElement>> entries;

  long size() const { return static_cast<long>(entries.size()); }
};

/// Companion system of a monic operator with basis m, Dm, ..., D^(n-1)m.
SystemMatrix companion_system(const TwistedOperator& ell);

struct CyclicForm {
  TwistedOperator op;
  /// Coordinates of the cyclic vector that worked.
  std::vector<LaurentElement> cyclic_vector;
  /// Transition determinant of (m, Dm, ..., D^(n-1)m); nonzero by construction.
  LaurentElement determinant;
  /// How many candidates were tried before success.
  long attempts;
};

/// Deterministic seeded search for a cyclic vector among sparse candidates
/// e_i and e_i + x^k e_j.  Each hit is verified: the transition determinant
/// must be nonzero and the solved coefficients must be Laurent polynomials.
/// Throws precondition_error("no cyclic vector found") past the search bound.
CyclicForm cyclic_form(const SystemMatrix& system, std::uint64_t seed = 0);

/// Number of candidates enumerated before giving up.
inline constexpr long kCyclicSearchBound = 256;

}  // namespace padiff
