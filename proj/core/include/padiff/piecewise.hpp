#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiff/rational.hpp"

namespace padiff {

/// The affine function s -> intercept + slope * s.
struct AffinePiece {
  Rational intercept;
  Rational slope;

  Rational at(const Rational& s) const { return intercept + slope * s; }
  bool operator==(const AffinePiece& o) const {
    return intercept == o.intercept && slope == o.slope;
  }
};

/// Continuous piecewise-affine function on an interval (lo, hi) of positive s,
/// hi possibly +infinity.  Pieces are separated by strictly increasing
/// breakpoints and adjacent pieces agree at each breakpoint.
class PiecewiseAffine {
 public:
  PiecewiseAffine(Rational lo, std::optional<Rational> hi,
                  std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces);

  static PiecewiseAffine single(Rational lo, std::optional<Rational> hi, AffinePiece piece);

  const Rational& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  bool contains(const Rational& s) const;

  /// Evaluates at s; throws precondition_error outside the domain.
  Rational at(const Rational& s) const;

  /// The piece governing s (ties at a breakpoint resolve right; the two
  /// pieces agree there anyway).
  const AffinePiece& piece_at(const Rational& s) const;

  /// The last breakpoint, or lo() when there is a single piece.
  Rational last_breakpoint() const;

  bool slopes_weakly_increasing() const;  // convex
  bool slopes_weakly_decreasing() const;  // concave

  bool operator==(const PiecewiseAffine& o) const;

  /// Pointwise sum on the intersection of domains (must be nonempty).
  friend PiecewiseAffine pw_add(const PiecewiseAffine& a, const PiecewiseAffine& b);

 private:
  Rational lo_;
  std::optional<Rational> hi_;
  std::vector<Rational> breaks_;
  std::vector<AffinePiece> pieces_;
};

}  // namespace padiff
