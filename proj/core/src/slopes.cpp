#include "padiff/slopes.hpp"

#include <algorithm>

#include "padiff/errors.hpp"

namespace padiff {

std::vector<RadiusValue> subsidiary_radii(const TwistedOperator& ell, const Rational& s) {
  StaticPolygon polygon = polygon_at(ell, s);
  long p = ell.prime();
  Rational omega = omega_val(p);

  std::vector<RadiusValue> out;
  // Hull slopes ascend, so effective segments come first and already yield
  // v = omega - slope in decreasing order = increasing radius order.
  for (const auto& seg : polygon.segments) {
    if (!seg.is_effective()) continue;
    for (long t = 0; t < seg.multiplicity; ++t)
      out.push_back({true, omega - seg.slope, Rational(0), Rational(0)});
  }
  while (static_cast<long>(out.size()) < ell.degree())
    out.push_back({false, Rational(0), s, s + omega});
  return out;
}

const PiecewiseAffine& RadiusFunction::leftmost() const {
  if (determined.empty()) throw precondition_error("radius function has no determined region");
  return determined.front();
}

namespace {

RadiusFunction assemble(const ParametricPolygon& pp,
                        const std::vector<std::optional<AffinePiece>>& per_interval) {
  RadiusFunction out;
  std::optional<std::size_t> open_start;
  Rational chunk_lo;
  std::optional<Rational> chunk_hi;
  std::vector<Rational> chunk_breaks;
  std::vector<AffinePiece> chunk_pieces;

  std::optional<Rational> gap_lo;
  std::optional<Rational> gap_hi;

  auto close_chunk = [&]() {
    if (!open_start) return;
    out.determined.emplace_back(chunk_lo, chunk_hi, chunk_breaks, chunk_pieces);
    open_start.reset();
    chunk_breaks.clear();
    chunk_pieces.clear();
  };
  auto close_gap = [&]() {
    if (!gap_lo) return;
    out.indeterminate.push_back({*gap_lo, gap_hi});
    gap_lo.reset();
  };

  for (std::size_t k = 0; k < pp.intervals.size(); ++k) {
    const ParamInterval& iv = pp.intervals[k];
    const auto& piece = per_interval[k];
    if (piece) {
      close_gap();
      if (open_start && chunk_hi && *chunk_hi == iv.lo) {
        // Continuity across the shared endpoint is forced by the hull.
        if (chunk_pieces.back().at(iv.lo) != piece->at(iv.lo))
          throw internal_error("radius function discontinuous across intervals");
        if (!(chunk_pieces.back() == *piece)) {
          chunk_breaks.push_back(iv.lo);
          chunk_pieces.push_back(*piece);
        }
        chunk_hi = iv.hi;
      } else {
        close_chunk();
        open_start = k;
        chunk_lo = iv.lo;
        chunk_hi = iv.hi;
        chunk_pieces = {*piece};
      }
    } else {
      close_chunk();
      if (gap_lo && gap_hi && *gap_hi == iv.lo) {
        gap_hi = iv.hi;
      } else {
        close_gap();
        gap_lo = iv.lo;
        gap_hi = iv.hi;
      }
    }
  }
  close_chunk();
  close_gap();
  return out;
}

}  // namespace

RadiiProfile radii_profile(const TwistedOperator& ell) {
  RadiiProfile profile;
  profile.n = ell.degree();
  profile.p = ell.prime();
  profile.decomposition = parametric_polygon(ell);
  const ParametricPolygon& pp = profile.decomposition;
  Rational omega = omega_val(profile.p);

  // det[j][k]: the affine form of f_{j+1} on interval k, when determined.
  std::vector<std::vector<std::optional<AffinePiece>>> det(
      static_cast<std::size_t>(profile.n),
      std::vector<std::optional<AffinePiece>>(pp.intervals.size()));
  for (std::size_t k = 0; k < pp.intervals.size(); ++k) {
    long idx = 0;
    for (const auto& seg : pp.intervals[k].segments) {
      if (seg.eff != Effectiveness::effective) continue;
      for (long t = 0; t < seg.multiplicity; ++t) {
        det[static_cast<std::size_t>(idx)][k] =
            AffinePiece{omega - seg.slope.intercept, -seg.slope.slope};
        ++idx;
      }
    }
  }

  for (long j = 0; j < profile.n; ++j)
    profile.f.push_back(assemble(pp, det[static_cast<std::size_t>(j)]));

  for (long i = 1; i <= profile.n; ++i) {
    std::vector<std::optional<AffinePiece>> sums(pp.intervals.size());
    for (std::size_t k = 0; k < pp.intervals.size(); ++k) {
      bool all = true;
      AffinePiece acc{Rational(0), Rational(0)};
      for (long j = 0; j < i; ++j) {
        const auto& piece = det[static_cast<std::size_t>(j)][k];
        if (!piece) {
          all = false;
          break;
        }
        acc.intercept += piece->intercept;
        acc.slope += piece->slope;
      }
      if (all) sums[k] = acc;
    }
    profile.F.push_back(assemble(pp, sums));
  }

  // Stable closed form on the final interval, checked against the formal
  // polygon data: f_j = 1/(p-1) + (1+beta_j)s + (vp(b_left) - vp(b_right))/dm.
  {
    const ParamInterval& last = pp.intervals.back();
    std::size_t last_k = pp.intervals.size() - 1;
    long idx = 0;
    for (std::size_t t = 0; t < last.segments.size(); ++t) {
      const ParamSegment& seg = last.segments[t];
      if (seg.eff != Effectiveness::effective) {
        idx += seg.multiplicity;
        continue;
      }
      long m_left = last.breaks[t];
      long m_right = last.breaks[t + 1];
      const LaurentElement& a_left = ell.coeff(-m_left);
      const LaurentElement& a_right = ell.coeff(-m_right);
      Rational dm(m_right - m_left);
      Rational fnp_slope = Rational(a_right.ord_x() - a_left.ord_x()) / dm;
      Rational beta = -fnp_slope - 1;
      Rational vp_left = *a_left.leading_coeff().vp();
      Rational vp_right = *a_right.leading_coeff().vp();
      AffinePiece expected{omega + (vp_left - vp_right) / dm, Rational(1) + beta};
      for (long c = 0; c < seg.multiplicity; ++c) {
        const auto& assembled = det[static_cast<std::size_t>(idx)][last_k];
        if (!assembled || !(*assembled == expected))
          throw internal_error("assembled radius function disagrees with the stable closed form");
        ++idx;
      }
    }
  }
  return profile;
}

namespace {

// L(s) <= chunk(s) on the whole chunk; endpoints suffice piecewise.
bool line_below_chunk(const AffinePiece& line, const PiecewiseAffine& chunk) {
  Rational at_lo = chunk.pieces().front().at(chunk.lo());
  if (line.at(chunk.lo()) > at_lo) return false;
  for (std::size_t b = 0; b < chunk.breakpoints().size(); ++b) {
    const Rational& x = chunk.breakpoints()[b];
    if (line.at(x) > chunk.pieces()[b].at(x)) return false;
  }
  if (chunk.hi()) {
    if (line.at(*chunk.hi()) > chunk.pieces().back().at(*chunk.hi())) return false;
  } else {
    if (line.slope > chunk.pieces().back().slope) return false;
    // Equal slopes: compare intercepts at the far end.
    if (line.slope == chunk.pieces().back().slope &&
        line.intercept > chunk.pieces().back().intercept)
      return false;
  }
  return true;
}

InferResult bound_mode(const RadiiProfile& profile) {
  InferResult result;
  result.certificate = "upper-bound";
  result.ok = true;
  for (long i = 1; i <= profile.n; ++i) {
    const RadiusFunction& Fi = profile.F[static_cast<std::size_t>(i - 1)];
    if (!Fi.has_data())
      throw precondition_error("F_" + std::to_string(i) + " has no determined region");
    const PiecewiseAffine& chunk = Fi.leftmost();
    const AffinePiece& first = chunk.pieces().front();
    Rational lo = chunk.lo();
    Rational chord;
    if (lo == 0) {
      if (first.intercept != 0)
        throw precondition_error("chord bound undefined: determined region touches s = 0 off the origin");
      chord = first.slope;
    } else {
      chord = first.at(lo) / lo;
    }
    result.values.push_back(chord - Rational(i));
  }
  result.notes.push_back("entries are upper bounds for the partial sums of alpha");
  return result;
}

}  // namespace

InferResult infer_padic(const RadiiProfile& profile, InferMode mode,
                        const std::optional<std::vector<Rational>>& declared_alpha) {
  if (mode == InferMode::certify) {
    // The leftmost determined segment of every F_i must be a line through
    // the origin; convexity then pins the slope near 0 exactly.
    std::vector<Rational> partial;
    bool exact = true;
    std::string why;
    for (long i = 1; i <= profile.n; ++i) {
      const RadiusFunction& Fi = profile.F[static_cast<std::size_t>(i - 1)];
      if (!Fi.has_data()) {
        exact = false;
        why = "F_" + std::to_string(i) + " has no determined region";
        break;
      }
      const AffinePiece& first = Fi.leftmost().pieces().front();
      if (first.intercept != 0) {
        exact = false;
        why = "F_" + std::to_string(i) + " leftmost segment misses the origin";
        break;
      }
      partial.push_back(first.slope - Rational(i));
    }
    if (exact) {
      InferResult result;
      result.certificate = "exact";
      result.ok = true;
      Rational prev(0);
      for (long i = 1; i <= profile.n; ++i) {
        result.values.push_back(partial[static_cast<std::size_t>(i - 1)] - prev);
        prev = partial[static_cast<std::size_t>(i - 1)];
      }
      for (std::size_t i = 0; i + 1 < result.values.size(); ++i)
        if (result.values[i] < result.values[i + 1])
          throw internal_error("certified p-adic slopes are not decreasing");
      return result;
    }
    InferResult result = bound_mode(profile);
    result.notes.push_back("certify failed over to bound: " + why);
    return result;
  }

  if (mode == InferMode::bound) return bound_mode(profile);

  // Declared mode.
  if (!declared_alpha) throw precondition_error("declared mode needs declared slopes");
  std::vector<Rational> alpha = *declared_alpha;
  if (static_cast<long>(alpha.size()) != profile.n)
    throw precondition_error("declared slope count must equal the rank");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw precondition_error("declared slopes must be nonnegative");
    if (i + 1 < alpha.size() && alpha[i] < alpha[i + 1])
      throw precondition_error("declared slopes must be listed in decreasing order");
  }

  InferResult result;
  result.values = alpha;
  result.ok = true;
  auto violation = [&](const std::string& what) {
    result.ok = false;
    if (result.certificate.empty()) result.certificate = "violation: " + what;
    result.notes.push_back(what);
  };

  Rational partial(0);
  for (long i = 1; i <= profile.n; ++i) {
    partial += alpha[static_cast<std::size_t>(i - 1)];
    const RadiusFunction& Fi = profile.F[static_cast<std::size_t>(i - 1)];
    if (!Fi.has_data()) {
      result.notes.push_back("F_" + std::to_string(i) + " has no determined region; nothing to verify");
      continue;
    }
    AffinePiece line{Rational(0), Rational(i) + partial};

    bool below = true;
    for (const auto& chunk : Fi.determined)
      if (!line_below_chunk(line, chunk)) below = false;
    if (!below) {
      violation("declared line exceeds the observed F_" + std::to_string(i));
      continue;
    }

    const PiecewiseAffine& chunk = Fi.leftmost();
    const AffinePiece& first = chunk.pieces().front();
    if (line.slope > first.slope) {
      violation("junction at F_" + std::to_string(i) + " breaks convexity");
      continue;
    }
    if (line.slope == first.slope) {
      if (first.intercept != 0) {
        violation("declared line for F_" + std::to_string(i) +
                  " is parallel to the profile and never meets it");
        continue;
      }
      result.junctions.push_back({i, chunk.lo()});
      continue;
    }
    // Crossing of the declared line with the backward extension of the
    // first determined piece; it lands at or left of the determined region.
    Rational cross = first.intercept / (line.slope - first.slope);
    if (cross < 0) {
      violation("no convex junction exists for F_" + std::to_string(i));
      continue;
    }
    result.junctions.push_back({i, cross});
  }

  Rational total(0);
  for (const auto& a : alpha) total += a;
  if (!is_integer(total)) violation("irregularity sum(alpha) = " + to_string(total) + " is not an integer");

  if (result.ok) result.certificate = "consistent";
  return result;
}

std::optional<Rational> evaluate_radius(const RadiusFunction& fn, const Rational& s) {
  for (const auto& chunk : fn.determined)
    if (chunk.contains(s)) return chunk.at(s);
  return std::nullopt;
}

SlopeComparison compare_slopes(std::vector<Rational> alpha, std::vector<Rational> beta) {
  if (alpha.size() != beta.size())
    throw precondition_error("slope multisets must have equal cardinality");
  for (const auto& a : alpha)
    if (a < 0) throw precondition_error("slopes must be nonnegative");
  for (const auto& b : beta)
    if (b < 0) throw precondition_error("slopes must be nonnegative");
  std::sort(alpha.begin(), alpha.end(), std::greater<Rational>());
  std::sort(beta.begin(), beta.end(), std::greater<Rational>());

  SlopeComparison cmp;
  cmp.alpha = alpha;
  cmp.beta = beta;
  cmp.ok = true;
  Rational sa(0), sb(0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    sa += alpha[i];
    sb += beta[i];
    Verdict verdict;
    if (sa < sb) verdict = Verdict::strict;
    else if (sa == sb) verdict = Verdict::equal;
    else {
      verdict = Verdict::violation;
      cmp.ok = false;
    }
    cmp.partial_sums.push_back({static_cast<long>(i) + 1, sa, sb, verdict});
  }
  cmp.irregularity_integral = is_integer(sa);
  return cmp;
}

}  // namespace padiff
