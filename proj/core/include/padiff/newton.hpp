#pragma once

#include <optional>
#include <vector>

#include "padiff/twisted.hpp"

namespace padiff {

/// Effectiveness of a polygon segment.  A slope exactly on the cutoff
/// (slope == -1 formally, slope == -s at radius s) is tagged boundary and
/// treated as not effective: the radius formula only certifies radii
/// strictly below omega*rho.
enum class Effectiveness { effective, boundary, not_effective };

struct PolygonSegment {
  Rational slope;
  long multiplicity;
  Effectiveness eff;
  bool is_effective() const { return eff == Effectiveness::effective; }
};

/// Lower convex hull of the points (-i, v(a_i)).  Vertices run from (-n, 0)
/// (monic) rightwards; slopes strictly increase segment to segment.
struct StaticPolygon {
  std::vector<std::pair<long, Rational>> vertices;  // (x, height), x = -i
  std::vector<PolygonSegment> segments;

  /// Break abscissas m_0 < ... < m_k.
  std::vector<long> breaks() const;
  std::vector<Rational> slope_multiset() const;  // with multiplicity, ascending
};

/// Hull over ord_x; effectiveness against -1.  Zero coefficients contribute
/// no point, so with a_0 = 0 the hull ends left of x = 0.
StaticPolygon formal_polygon(const TwistedOperator& ell);

/// Formal slopes: {-lambda - 1 : lambda effective} padded with zeros to
/// degree n, listed in decreasing order.
std::vector<Rational> formal_slopes(const TwistedOperator& ell);

/// Hull over the Gauss valuations at s = -log_p(rho); effectiveness against
/// -s.  s must lie in every coefficient's certified interval.
StaticPolygon polygon_at(const TwistedOperator& ell, const Rational& s);

struct ParamSegment {
  AffinePiece slope;  // hull slope as a function of s
  long multiplicity;
  Effectiveness eff;
};

/// One maximal s-interval of constant hull combinatorics: same break set,
/// same effectiveness tags, same affine slope functions.
struct ParamInterval {
  Rational lo;
  std::optional<Rational> hi;  // nullopt on the final, unbounded interval
  std::vector<long> breaks;
  std::vector<ParamSegment> segments;
};

/// The family s -> NP_s(ell) over all of (0, inf).
struct ParametricPolygon {
  std::vector<ParamInterval> intervals;

  const ParamInterval& interval_containing(const Rational& s) const;
  const ParamInterval& final_interval() const { return intervals.back(); }
};

ParametricPolygon parametric_polygon(const TwistedOperator& ell);

/// Left endpoint of the final parametric interval: breaks and effectiveness
/// are constant from here on.
Rational stabilization_threshold(const TwistedOperator& ell);

/// Conservative a-priori stabilization constants computed from coefficient
/// data alone (no hull sweep), plus the directly computed threshold.  The
/// direct value never exceeds the combined bound.
struct ThresholdReport {
  Rational direct_stabilization;
  Rational c1, c2, c3, c4;
  Rational combined_bound;
  long skipped_triples;  // index sets touching a zero coefficient
};

ThresholdReport stabilization_bounds(const TwistedOperator& ell);

}  // namespace padiff
