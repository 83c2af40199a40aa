#pragma once

// Test-only oracles, kept independent of the hull implementation in the
// library: point heights by direct minimum scan and the lower hull by
// repeated pairwise slope minimization (gift wrapping).

#include <random>
#include <utility>
#include <vector>

#include "padiff/twisted.hpp"

namespace oracle {

using padiff::LaurentElement;
using padiff::PiScalar;
using padiff::Rational;
using padiff::TwistedOperator;

inline Rational direct_valuation(const LaurentElement& f, const Rational& s) {
  bool first = true;
  Rational best(0);
  for (const auto& [exp, c] : f.terms()) {
    Rational v = *c.vp() + Rational(exp) * s;
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

/// Lower hull by gift wrapping: from the leftmost point, repeatedly take the
/// pair slope minimum, breaking ties toward the farthest point so collinear
/// interior points never become vertices.
inline std::vector<std::pair<long, Rational>> brute_hull(
    std::vector<std::pair<long, Rational>> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<long, Rational>> out;
  std::size_t cur = 0;
  out.push_back(pts[0]);
  while (cur + 1 < pts.size()) {
    std::size_t best = cur + 1;
    Rational best_slope = (pts[best].second - pts[cur].second) /
                          Rational(pts[best].first - pts[cur].first);
    for (std::size_t j = cur + 2; j < pts.size(); ++j) {
      Rational slope = (pts[j].second - pts[cur].second) /
                       Rational(pts[j].first - pts[cur].first);
      if (slope < best_slope || (slope == best_slope && j > best)) {
        best = j;
        best_slope = slope;
      }
    }
    out.push_back(pts[best]);
    cur = best;
  }
  return out;
}

inline std::vector<std::pair<long, Rational>> brute_polygon(const TwistedOperator& ell,
                                                            const Rational& s) {
  std::vector<std::pair<long, Rational>> pts;
  for (long i = 0; i <= ell.degree(); ++i) {
    if (ell.coeff(i).is_zero()) continue;
    pts.push_back({-i, direct_valuation(ell.coeff(i), s)});
  }
  return brute_hull(std::move(pts));
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  Rational rational(long bound = 20, long max_den = 12) {
    return padiff::rat(pick(-bound, bound), pick(1, max_den));
  }
  Rational positive_rational(long max_num, long max_den) {
    return padiff::rat(pick(1, max_num), pick(1, max_den));
  }
  PiScalar pi_scalar(long p, bool nonzero = false) {
    while (true) {
      PiScalar out(p);
      std::vector<Rational> coeffs;
      for (long k = 0; k < p - 1; ++k)
        coeffs.push_back(pick(0, 2) == 0 ? Rational(0) : rational(9, 6));
      out = PiScalar(p, coeffs);
      if (!nonzero || !out.is_zero()) return out;
    }
  }
  LaurentElement laurent(long p, bool nonzero = false) {
    while (true) {
      std::map<long, PiScalar> terms;
      long count = pick(1, 5);
      for (long t = 0; t < count; ++t) {
        PiScalar c = pi_scalar(p);
        if (!c.is_zero()) terms.insert_or_assign(pick(-6, 6), c);
      }
      LaurentElement out(p, std::move(terms));
      if (!nonzero || !out.is_zero()) return out;
    }
  }
  TwistedOperator monic_operator(long p, long degree) {
    std::vector<LaurentElement> coeffs;
    for (long i = 0; i < degree; ++i)
      coeffs.push_back(pick(0, 4) == 0 ? LaurentElement(p) : laurent(p));
    coeffs.push_back(LaurentElement::one(p));
    return TwistedOperator(p, std::move(coeffs));
  }
  TwistedOperator operator_any(long p, long degree) {
    std::vector<LaurentElement> coeffs;
    for (long i = 0; i <= degree; ++i) coeffs.push_back(laurent(p));
    return TwistedOperator(p, std::move(coeffs));
  }
  /// Random s in (1/10, 20).
  Rational sample_s() {
    long den = pick(1, 97);
    long lo = den / 10 + 1;
    long hi = 20 * den - 1;
    return padiff::rat(pick(lo, hi), den);
  }
};

}  // namespace oracle
