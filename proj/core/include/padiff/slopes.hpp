#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiff/newton.hpp"

namespace padiff {

/// One subsidiary radius at a fixed s, in v = -log_p(R) form.  Radii at or
/// above omega*rho are invisible to the polygon and reported as the
/// two-sided bound v in [s, s + 1/(p-1)].
struct RadiusValue {
  bool determined;
  Rational v;            // meaningful when determined; then v > s + 1/(p-1)
  Rational bound_lo, bound_hi;  // meaningful when indeterminate
};

/// Radii listed in increasing radius order, i.e. decreasing v: determined
/// values first.
std::vector<RadiusValue> subsidiary_radii(const TwistedOperator& ell, const Rational& s);

struct SInterval {
  Rational lo;
  std::optional<Rational> hi;
};

/// f_j (or F_j) on the sub-domain where it is determined, as disjoint
/// ascending piecewise-affine chunks, plus the indeterminate gaps.
struct RadiusFunction {
  std::vector<PiecewiseAffine> determined;
  std::vector<SInterval> indeterminate;

  bool has_data() const { return !determined.empty(); }
  /// Leftmost determined chunk; requires has_data().
  const PiecewiseAffine& leftmost() const;
};

struct RadiiProfile {
  long n;
  long p;
  std::vector<RadiusFunction> f;  // f[j-1] = f_j = -log_p R_j
  std::vector<RadiusFunction> F;  // F[i-1] = f_1 + ... + f_i where all determined
  ParametricPolygon decomposition;
};

/// Assembles f_j across the parametric decomposition and checks the final
/// interval against the stable closed form
///   f_j(s) = 1/(p-1) + (1+beta_j)s + (vp(b_{-m_{s-1}}) - vp(b_{-m_s}))/(m_s - m_{s-1}).
/// A mismatch is an internal error.
RadiiProfile radii_profile(const TwistedOperator& ell);

enum class InferMode { declared, certify, bound };

struct InferResult {
  /// certify/declared: the p-adic slopes alpha_1 >= ... >= alpha_n.
  /// bound: per-i upper bounds for the partial sums sum_{j<=i} alpha_j.
  std::vector<Rational> values;
  std::string certificate;  // "exact", "consistent", "upper-bound", or "violation: ..."
  bool ok;
  std::vector<std::string> notes;
  /// declared mode: per-i junction point of the prepended line with the
  /// determined graph.
  std::vector<std::pair<long, Rational>> junctions;
};

InferResult infer_padic(const RadiiProfile& profile, InferMode mode,
                        const std::optional<std::vector<Rational>>& declared_alpha = std::nullopt);

enum class Verdict { strict, equal, violation };

struct PartialSum {
  long i;
  Rational alpha_sum;
  Rational beta_sum;
  Verdict verdict;
};

struct SlopeComparison {
  std::vector<Rational> alpha;  // decreasing
  std::vector<Rational> beta;   // decreasing
  std::vector<PartialSum> partial_sums;
  bool irregularity_integral;  // sum(alpha) in Z
  bool ok;                     // no violation anywhere
};

/// Per-index partial-sum comparison sum alpha_j <= sum beta_j.
SlopeComparison compare_slopes(std::vector<Rational> alpha, std::vector<Rational> beta);

/// Exact value of a radius function at s, or nullopt where indeterminate.
std::optional<Rational> evaluate_radius(const RadiusFunction& fn, const Rational& s);

}  // namespace padiff
