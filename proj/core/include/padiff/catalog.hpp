#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiff/twisted.hpp"

namespace padiff {

/// A serializable operator plus optional metadata.
struct ModuleFile {
  TwistedOperator op;
  std::optional<std::string> label;
  std::optional<std::vector<Rational>> declared_alpha;  // decreasing
};

/// Rank-n Bessel operator at infinity: theta^n - (-pi)^n / x expanded to
/// monic T-form.  Constant coefficient -(-pi)^n x^(-n-1); integer middle
/// coefficients from the theta expansion.
ModuleFile catalog_bessel(long n, long p);

/// exp(pi / x^k): the operator T + k pi x^(-k-1).  Declared p-adic slope 1
/// when k is a power of p.
ModuleFile catalog_exp(long k, long p);

/// The degree-3 trace-zero endomorphism operator of the rank-2 Bessel module
/// at p = 2, with declared slopes {1/3, 1/3, 1/3}.
ModuleFile catalog_adjoint_bessel2();

/// Every operator exercised by the acceptance suite.
std::vector<ModuleFile> catalog_all();

}  // namespace padiff
