#include "padiff/newton.hpp"

#include <algorithm>
#include <set>

#include "padiff/errors.hpp"

namespace padiff {

namespace {

struct Point {
  long index;  // T-power i; abscissa is -i
  Rational y;
};

// Lower convex hull of points with strictly increasing abscissas -i.
// Keeps only strict slope increases, so vertices are exactly the breaks.
std::vector<Point> lower_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return -a.index < -b.index; });
  std::vector<Point> hull;
  for (const Point& pt : pts) {
    while (hull.size() >= 2) {
      const Point& a = hull[hull.size() - 2];
      const Point& b = hull[hull.size() - 1];
      // slope(a,b) >= slope(b,pt) means b is not a strict vertex.
      Rational lhs = (b.y - a.y) * Rational(-pt.index - (-b.index));
      Rational rhs = (pt.y - b.y) * Rational(-b.index - (-a.index));
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  return hull;
}

Effectiveness classify(const Rational& slope, const Rational& cutoff) {
  if (slope < cutoff) return Effectiveness::effective;
  if (slope == cutoff) return Effectiveness::boundary;
  return Effectiveness::not_effective;
}

StaticPolygon polygon_from_hull(const std::vector<Point>& hull, const Rational& cutoff) {
  StaticPolygon out;
  for (const Point& pt : hull) out.vertices.push_back({-pt.index, pt.y});
  for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
    long mult = hull[v].index - hull[v + 1].index;
    Rational slope = (hull[v + 1].y - hull[v].y) / Rational(mult);
    out.segments.push_back({slope, mult, classify(slope, cutoff)});
  }
  return out;
}

}  // namespace

std::vector<long> StaticPolygon::breaks() const {
  std::vector<long> out;
  out.reserve(vertices.size());
  for (const auto& [x, y] : vertices) out.push_back(x);
  return out;
}

std::vector<Rational> StaticPolygon::slope_multiset() const {
  std::vector<Rational> out;
  for (const auto& seg : segments)
    for (long t = 0; t < seg.multiplicity; ++t) out.push_back(seg.slope);
  return out;
}

StaticPolygon formal_polygon(const TwistedOperator& ell) {
  ell.require_monic_nonconstant("formal_polygon");
  std::vector<Point> pts;
  for (long i = 0; i <= ell.degree(); ++i) {
    const LaurentElement& a = ell.coeff(i);
    if (a.is_zero()) continue;
    pts.push_back({i, Rational(a.ord_x())});
  }
  return polygon_from_hull(lower_hull(std::move(pts)), Rational(-1));
}

std::vector<Rational> formal_slopes(const TwistedOperator& ell) {
  StaticPolygon polygon = formal_polygon(ell);
  std::vector<Rational> out;
  for (const auto& seg : polygon.segments) {
    if (!seg.is_effective()) continue;
    for (long t = 0; t < seg.multiplicity; ++t) out.push_back(-seg.slope - 1);
  }
  while (static_cast<long>(out.size()) < ell.degree()) out.push_back(Rational(0));
  std::sort(out.begin(), out.end(), std::greater<Rational>());
  return out;
}

StaticPolygon polygon_at(const TwistedOperator& ell, const Rational& s) {
  ell.require_monic_nonconstant("polygon_at");
  if (!(s > 0)) throw precondition_error("polygon_at requires s > 0");
  std::vector<Point> pts;
  for (long i = 0; i <= ell.degree(); ++i) {
    const LaurentElement& a = ell.coeff(i);
    if (a.is_zero()) continue;
    GaussEnvelope env = gauss_envelope(a);
    if (s < env.certified_from)
      throw precondition_error("s = " + to_string(s) +
                               " is outside the certified interval of coefficient " +
                               std::to_string(i) + " (certified from " +
                               to_string(env.certified_from) + ")");
    pts.push_back({i, env.envelope.at(s)});
  }
  return polygon_from_hull(lower_hull(std::move(pts)), -s);
}

const ParamInterval& ParametricPolygon::interval_containing(const Rational& s) const {
  for (const auto& iv : intervals) {
    if (s > iv.lo && (!iv.hi || s < *iv.hi)) return iv;
  }
  throw precondition_error("s = " + to_string(s) +
                           " is a critical value or outside (0, inf)");
}

ParametricPolygon parametric_polygon(const TwistedOperator& ell) {
  ell.require_monic_nonconstant("parametric_polygon");

  struct CoeffData {
    long index;
    GaussEnvelope env;
  };
  std::vector<CoeffData> coeffs;
  for (long i = 0; i <= ell.degree(); ++i) {
    const LaurentElement& a = ell.coeff(i);
    if (a.is_zero()) continue;
    GaussEnvelope env = gauss_envelope(a);
    if (!env.certified_everywhere())
      throw precondition_error("coefficient " + std::to_string(i) +
                               " is not certified on all of (0, inf); its tail bound "
                               "certifies only s >= " + to_string(env.certified_from));
    coeffs.push_back({i, std::move(env)});
  }

  // Stage 1: partition (0, inf) by the coefficient-envelope breakpoints, so
  // every point height is a single affine function on each cell.
  std::set<Rational> cell_cuts;
  for (const auto& c : coeffs)
    for (const auto& b : c.env.envelope.breakpoints())
      if (b > 0) cell_cuts.insert(b);

  // Stage 2: collect critical s-values inside each cell: pairwise slope
  // equality between any two point pairs, and effectiveness boundaries.
  std::set<Rational> criticals(cell_cuts.begin(), cell_cuts.end());
  std::vector<Rational> cuts(cell_cuts.begin(), cell_cuts.end());
  for (std::size_t cell = 0; cell <= cuts.size(); ++cell) {
    Rational left = cell == 0 ? Rational(0) : cuts[cell - 1];
    std::optional<Rational> right;
    if (cell < cuts.size()) right = cuts[cell];
    Rational witness = right ? Rational((left + *right) / 2) : Rational(left + 1);

    std::vector<std::pair<long, AffinePiece>> forms;
    forms.reserve(coeffs.size());
    for (const auto& c : coeffs)
      forms.push_back({c.index, c.env.envelope.piece_at(witness)});

    auto add_root = [&](const Rational& a, const Rational& b) {
      // a + b*s = 0
      if (b == 0) return;
      Rational root = -a / b;
      if (root > left && (!right || root < *right)) criticals.insert(root);
    };

    struct PairForm {
      Rational du, dw;
      long span;
    };
    std::vector<PairForm> pairs;
    for (std::size_t u = 0; u < forms.size(); ++u) {
      for (std::size_t v = u + 1; v < forms.size(); ++v) {
        // Points at abscissas -i (u) and -j (v), i > j.
        const auto& [i, fi] = forms[v];
        const auto& [j, fj] = forms[u];
        pairs.push_back({fj.intercept - fi.intercept, fj.slope - fi.slope, i - j});
      }
    }
    for (std::size_t u = 0; u < pairs.size(); ++u) {
      // Effectiveness boundary: slope(s) = -s.
      add_root(pairs[u].du, pairs[u].dw + Rational(pairs[u].span));
      for (std::size_t v = u + 1; v < pairs.size(); ++v) {
        add_root(pairs[u].du * Rational(pairs[v].span) - pairs[v].du * Rational(pairs[u].span),
                 pairs[u].dw * Rational(pairs[v].span) - pairs[v].dw * Rational(pairs[u].span));
      }
    }
  }

  // Stage 3: one interval per gap, hull computed at a rational witness and
  // lifted back to affine slope functions.
  std::vector<Rational> grid(criticals.begin(), criticals.end());
  ParametricPolygon out;
  for (std::size_t g = 0; g <= grid.size(); ++g) {
    Rational left = g == 0 ? Rational(0) : grid[g - 1];
    std::optional<Rational> right;
    if (g < grid.size()) right = grid[g];
    Rational witness = right ? Rational((left + *right) / 2) : Rational(left + 1);

    std::vector<std::pair<long, AffinePiece>> forms;
    std::vector<Point> pts;
    for (const auto& c : coeffs) {
      AffinePiece piece = c.env.envelope.piece_at(witness);
      pts.push_back({c.index, piece.at(witness)});
      forms.push_back({c.index, piece});
    }
    std::vector<Point> hull = lower_hull(std::move(pts));

    auto form_of = [&](long index) -> const AffinePiece& {
      for (const auto& [i, f] : forms)
        if (i == index) return f;
      throw internal_error("missing affine form");
    };

    ParamInterval iv;
    iv.lo = left;
    iv.hi = right;
    for (const Point& v : hull) iv.breaks.push_back(-v.index);
    for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
      long i = hull[v].index;
      long j = hull[v + 1].index;
      const AffinePiece& fi = form_of(i);
      const AffinePiece& fj = form_of(j);
      AffinePiece sigma{(fj.intercept - fi.intercept) / Rational(i - j),
                        (fj.slope - fi.slope) / Rational(i - j)};
      AffinePiece margin{sigma.intercept, sigma.slope + 1};  // sigma(s) + s
      Effectiveness eff;
      if (margin.intercept == 0 && margin.slope == 0) {
        eff = Effectiveness::boundary;
      } else {
        Rational m = margin.at(witness);
        if (m == 0) throw internal_error("effectiveness boundary at an interval witness");
        eff = m < 0 ? Effectiveness::effective : Effectiveness::not_effective;
      }
      iv.segments.push_back({sigma, i - j, eff});
    }
    out.intervals.push_back(std::move(iv));
  }

  // Merge adjacent intervals with identical combinatorics.
  std::vector<ParamInterval> merged;
  for (auto& iv : out.intervals) {
    auto same = [&](const ParamInterval& a, const ParamInterval& b) {
      if (a.breaks != b.breaks || a.segments.size() != b.segments.size()) return false;
      for (std::size_t k = 0; k < a.segments.size(); ++k) {
        if (!(a.segments[k].slope == b.segments[k].slope) ||
            a.segments[k].multiplicity != b.segments[k].multiplicity ||
            a.segments[k].eff != b.segments[k].eff)
          return false;
      }
      return true;
    };
    if (!merged.empty() && same(merged.back(), iv)) {
      merged.back().hi = iv.hi;
    } else {
      merged.push_back(std::move(iv));
    }
  }
  out.intervals = std::move(merged);

  // Asymptotic consistency: on the final interval the s-coefficients of the
  // hull slopes must reproduce the formal polygon's slope multiset.
  {
    std::vector<Rational> s_coeffs;
    for (const auto& seg : out.intervals.back().segments)
      for (long t = 0; t < seg.multiplicity; ++t) s_coeffs.push_back(seg.slope.slope);
    std::vector<Rational> fnp = formal_polygon(ell).slope_multiset();
    std::sort(s_coeffs.begin(), s_coeffs.end());
    std::sort(fnp.begin(), fnp.end());
    if (s_coeffs != fnp)
      throw internal_error("final parametric interval disagrees with the formal polygon");
  }
  return out;
}

Rational stabilization_threshold(const TwistedOperator& ell) {
  return parametric_polygon(ell).intervals.back().lo;
}

ThresholdReport stabilization_bounds(const TwistedOperator& ell) {
  ell.require_monic_nonconstant("stabilization_bounds");
  long n = ell.degree();

  ThresholdReport report;
  report.skipped_triples = 0;

  std::vector<std::optional<Rational>> vp(static_cast<std::size_t>(n) + 1);
  report.c1 = 0;
  for (long i = 0; i <= n; ++i) {
    const LaurentElement& a = ell.coeff(i);
    if (a.is_zero()) continue;
    vp[static_cast<std::size_t>(i)] = *a.leading_coeff().vp();
    report.c1 = rat_max(report.c1, dominance_threshold(a));
  }
  auto have = [&](long i) { return vp[static_cast<std::size_t>(i)].has_value(); };
  auto v = [&](long i) { return *vp[static_cast<std::size_t>(i)]; };

  Rational worst2(0), worst3(0), worst4(0);
  for (long h = 0; h <= n; ++h)
    for (long j = h + 1; j <= n; ++j)
      for (long k = j; k <= n; ++k) {
        if (!have(h) || !have(j) || !have(k)) {
          ++report.skipped_triples;
          continue;
        }
        Rational theta = (v(h) - v(j)) / Rational(j - h) + (v(k) - v(h)) / Rational(k - h);
        worst2 = rat_max(worst2, rat_abs(theta));
      }
  for (long h = 0; h <= n; ++h)
    for (long j = h + 1; j <= n; ++j)
      for (long k = j + 1; k <= n; ++k) {
        if (!have(h) || !have(j) || !have(k)) {
          ++report.skipped_triples;
          continue;
        }
        Rational theta = (v(k) - v(j)) / Rational(k - j) + (v(h) - v(j)) / Rational(h - j);
        worst3 = rat_max(worst3, rat_abs(theta));
      }
  for (long j = 0; j <= n; ++j)
    for (long k = j + 1; k <= n; ++k) {
      if (!have(j) || !have(k)) {
        ++report.skipped_triples;
        continue;
      }
      worst4 = rat_max(worst4, rat_abs((v(j) - v(k)) / Rational(k - j)));
    }

  report.c2 = Rational(n * n + 1) * worst2;
  report.c3 = Rational(n * n + 1) * worst3;
  report.c4 = Rational(n + 1) * worst4;
  report.combined_bound = rat_max(rat_max(report.c1, report.c2), rat_max(report.c3, report.c4));
  report.direct_stabilization = stabilization_threshold(ell);
  if (report.direct_stabilization > report.combined_bound)
    throw internal_error("direct stabilization threshold exceeds the a-priori bound");
  return report;
}

}  // namespace padiff
