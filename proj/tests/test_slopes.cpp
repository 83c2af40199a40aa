#include <doctest.h>

#include "oracle_hull.hpp"
#include "padiff/catalog.hpp"
#include "padiff/errors.hpp"
#include "padiff/slopes.hpp"

using namespace padiff;

namespace {

TwistedOperator t_minus_4xm3() {
  return TwistedOperator(
      2, {LaurentElement::monomial(2, -3, PiScalar::from_long(2, -4)), LaurentElement::one(2)});
}

}  // namespace

TEST_CASE("subsidiary radii at a point") {
  TwistedOperator bessel = catalog_bessel(2, 2).op;
  SUBCASE("both determined at s = 3") {
    auto radii = subsidiary_radii(bessel, Rational(3));
    REQUIRE(radii.size() == 2);
    for (const auto& rv : radii) {
      CHECK(rv.determined);
      CHECK(rv.v == rat(9, 2));  // R = rho^(3/2) at rho = 2^-3
    }
  }
  SUBCASE("both indeterminate at s = 1") {
    auto radii = subsidiary_radii(bessel, Rational(1));
    REQUIRE(radii.size() == 2);
    for (const auto& rv : radii) {
      CHECK(!rv.determined);
      CHECK(rv.bound_lo == 1);
      CHECK(rv.bound_hi == 2);  // [s, s + 1/(p-1)]
    }
  }
  SUBCASE("T - 4x^-3 at s = 4") {
    auto radii = subsidiary_radii(t_minus_4xm3(), Rational(4));
    REQUIRE(radii.size() == 1);
    CHECK(radii[0].determined);
    CHECK(radii[0].v == 11);
  }
}

TEST_CASE("determined radii sit strictly below omega rho") {
  oracle::Rng rng(211);
  for (const ModuleFile& mf : catalog_all()) {
    Rational omega = omega_val(mf.op.prime());
    for (int trial = 0; trial < 25; ++trial) {
      Rational s = rng.sample_s();
      for (const auto& rv : subsidiary_radii(mf.op, s))
        if (rv.determined) CHECK(rv.v > s + omega);
    }
  }
}

TEST_CASE("radii profile of the rank-2 Bessel operator") {
  RadiiProfile profile = radii_profile(catalog_bessel(2, 2).op);
  REQUIRE(profile.n == 2);
  for (long j = 0; j < 2; ++j) {
    const RadiusFunction& f = profile.f[static_cast<std::size_t>(j)];
    REQUIRE(f.determined.size() == 1);
    CHECK(f.determined[0].lo() == 2);
    CHECK(!f.determined[0].hi());
    CHECK(f.determined[0].pieces().size() == 1);
    CHECK(f.determined[0].pieces()[0] == AffinePiece{Rational(0), rat(3, 2)});
    REQUIRE(f.indeterminate.size() == 1);
    CHECK(f.indeterminate[0].lo == 0);
    CHECK(*f.indeterminate[0].hi == 2);
  }
  const RadiusFunction& F2 = profile.F[1];
  REQUIRE(F2.determined.size() == 1);
  CHECK(F2.determined[0].pieces()[0] == AffinePiece{Rational(0), Rational(3)});
}

TEST_CASE("radii profile of T - 4x^-3") {
  RadiiProfile profile = radii_profile(t_minus_4xm3());
  REQUIRE(profile.f[0].determined.size() == 1);
  CHECK(profile.f[0].determined[0].lo() == 1);
  CHECK(profile.f[0].determined[0].pieces()[0] == AffinePiece{Rational(-1), Rational(3)});
}

TEST_CASE("adjoint profile: final slopes are 1 + beta_j") {
  RadiiProfile profile = radii_profile(catalog_adjoint_bessel2().op);
  std::vector<Rational> final_slopes;
  for (const auto& f : profile.f) {
    REQUIRE(f.has_data());
    const PiecewiseAffine& chunk = f.determined.back();
    final_slopes.push_back(chunk.pieces().back().slope);
  }
  CHECK(final_slopes == std::vector<Rational>{rat(3, 2), rat(3, 2), Rational(1)});
  // the two-piece chunk of f_1: (4/3)s on (3,6), (3/2)s - 1 beyond
  const PiecewiseAffine& f1 = profile.f[0].determined[0];
  CHECK(f1.lo() == 3);
  CHECK(f1.breakpoints() == std::vector<Rational>{Rational(6)});
  CHECK(f1.pieces()[0] == AffinePiece{Rational(0), rat(4, 3)});
  CHECK(f1.pieces()[1] == AffinePiece{Rational(-1), rat(3, 2)});
}

TEST_CASE("radius functions are ordered and F_i convex") {
  oracle::Rng rng(223);
  for (const ModuleFile& mf : catalog_all()) {
    RadiiProfile profile = radii_profile(mf.op);
    for (const auto& F : profile.F)
      for (const auto& chunk : F.determined) CHECK(chunk.slopes_weakly_increasing());
    for (int trial = 0; trial < 30; ++trial) {
      Rational s = rng.sample_s();
      for (long j = 0; j + 1 < profile.n; ++j) {
        auto hi = evaluate_radius(profile.f[static_cast<std::size_t>(j)], s);
        auto lo = evaluate_radius(profile.f[static_cast<std::size_t>(j + 1)], s);
        if (hi && lo) CHECK(*hi >= *lo);
      }
    }
  }
}

TEST_CASE("final-interval slope accounting") {
  for (const ModuleFile& mf : catalog_all()) {
    RadiiProfile profile = radii_profile(mf.op);
    Rational wild_sum(0);
    long determined = 0;
    for (const auto& f : profile.f) {
      if (!f.has_data()) continue;
      const PiecewiseAffine& last = f.determined.back();
      if (last.hi()) continue;  // only the unbounded chunks reach the final interval
      wild_sum += last.pieces().back().slope - 1;
      ++determined;
    }
    Rational beta_sum(0);
    for (const auto& b : formal_slopes(mf.op))
      if (b > 0) beta_sum += b;
    CHECK(wild_sum == beta_sum);
    (void)determined;
  }
}

TEST_CASE("certify mode") {
  SUBCASE("Bessel: exact equal slopes") {
    InferResult res = infer_padic(radii_profile(catalog_bessel(2, 2).op), InferMode::certify);
    CHECK(res.certificate == "exact");
    CHECK(res.values == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  }
  SUBCASE("adjoint: exact 1/3 slopes") {
    InferResult res = infer_padic(radii_profile(catalog_adjoint_bessel2().op), InferMode::certify);
    CHECK(res.certificate == "exact");
    CHECK(res.values == std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
  }
  SUBCASE("nonzero intercept fails over to bound") {
    InferResult res = infer_padic(radii_profile(t_minus_4xm3()), InferMode::certify);
    CHECK(res.certificate == "upper-bound");
    REQUIRE(res.values.size() == 1);
    // chord from the origin to (1, f_1(1)) = (1, 2): bound 2 - 1 = 1
    CHECK(res.values[0] == 1);
  }
}

TEST_CASE("bound mode") {
  InferResult res = infer_padic(radii_profile(catalog_bessel(2, 2).op), InferMode::bound);
  CHECK(res.certificate == "upper-bound");
  CHECK(res.values == std::vector<Rational>{rat(1, 2), Rational(1)});
}

TEST_CASE("declared mode") {
  RadiiProfile profile = radii_profile(t_minus_4xm3());
  SUBCASE("the known declared slope is consistent") {
    InferResult res = infer_padic(profile, InferMode::declared, std::vector<Rational>{Rational(1)});
    CHECK(res.ok);
    CHECK(res.certificate == "consistent");
    REQUIRE(res.junctions.size() == 1);
    CHECK(res.junctions[0].second == 1);  // 2s meets 3s - 1 at s = 1
  }
  SUBCASE("declared line through the profile is rejected") {
    InferResult res = infer_padic(profile, InferMode::declared, std::vector<Rational>{Rational(2)});
    CHECK(!res.ok);
  }
  SUBCASE("declared line above the profile is rejected") {
    InferResult res = infer_padic(profile, InferMode::declared, std::vector<Rational>{Rational(3)});
    CHECK(!res.ok);
  }
  SUBCASE("non-integral irregularity is a named violation") {
    InferResult res = infer_padic(profile, InferMode::declared, std::vector<Rational>{rat(1, 2)});
    CHECK(!res.ok);
    CHECK(res.certificate.find("integer") != std::string::npos);
  }
  SUBCASE("shape errors throw") {
    CHECK_THROWS_AS(infer_padic(profile, InferMode::declared, std::vector<Rational>{Rational(-1)}),
                    precondition_error);
    CHECK_THROWS_AS(
        infer_padic(profile, InferMode::declared, std::vector<Rational>{Rational(1), Rational(1)}),
        precondition_error);
    CHECK_THROWS_AS(infer_padic(profile, InferMode::declared, std::nullopt), precondition_error);
    RadiiProfile bessel = radii_profile(catalog_bessel(2, 2).op);
    CHECK_THROWS_AS(
        infer_padic(bessel, InferMode::declared, std::vector<Rational>{rat(1, 3), rat(1, 2)}),
        precondition_error);  // increasing order
  }
}

TEST_CASE("declared mode accepts the adjoint data with junctions") {
  RadiiProfile profile = radii_profile(catalog_adjoint_bessel2().op);
  InferResult res = infer_padic(profile, InferMode::declared,
                                std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
  CHECK(res.ok);
  CHECK(res.certificate == "consistent");
}

TEST_CASE("everywhere-indeterminate profiles") {
  // T + x^-1: the single hull slope is identically -s, a boundary case, so
  // no radius is ever determined by the polygon.
  TwistedOperator ell(
      2, {LaurentElement::monomial(2, -1, PiScalar::one(2)), LaurentElement::one(2)});
  CHECK(formal_slopes(ell) == std::vector<Rational>{Rational(0)});
  RadiiProfile profile = radii_profile(ell);
  CHECK(!profile.f[0].has_data());
  REQUIRE(profile.f[0].indeterminate.size() == 1);
  CHECK(profile.f[0].indeterminate[0].lo == 0);
  CHECK(!profile.f[0].indeterminate[0].hi);
  // certify falls over to bound, which has nothing to chord against
  CHECK_THROWS_AS(infer_padic(profile, InferMode::certify), precondition_error);
  // declared data is vacuously consistent when integral
  InferResult res = infer_padic(profile, InferMode::declared, std::vector<Rational>{Rational(0)});
  CHECK(res.ok);
}

TEST_CASE("compare_slopes") {
  SUBCASE("all equal for Bessel data") {
    SlopeComparison cmp = compare_slopes({rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)});
    CHECK(cmp.ok);
    for (const auto& ps : cmp.partial_sums) CHECK(ps.verdict == Verdict::equal);
    CHECK(cmp.irregularity_integral);
  }
  SUBCASE("strict for the exponential gap") {
    SlopeComparison cmp = compare_slopes({Rational(1)}, {Rational(4)});
    CHECK(cmp.ok);
    CHECK(cmp.partial_sums[0].verdict == Verdict::strict);
  }
  SUBCASE("adjoint: strict, strict, equal") {
    SlopeComparison cmp =
        compare_slopes({rat(1, 3), rat(1, 3), rat(1, 3)}, {rat(1, 2), rat(1, 2), Rational(0)});
    CHECK(cmp.ok);
    CHECK(cmp.partial_sums[0].verdict == Verdict::strict);
    CHECK(cmp.partial_sums[1].verdict == Verdict::strict);
    CHECK(cmp.partial_sums[2].verdict == Verdict::equal);
  }
  SUBCASE("violations are flagged") {
    SlopeComparison cmp = compare_slopes({Rational(2)}, {Rational(1)});
    CHECK(!cmp.ok);
    CHECK(cmp.partial_sums[0].verdict == Verdict::violation);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(compare_slopes({Rational(1)}, {Rational(1), Rational(0)}), precondition_error);
    CHECK_THROWS_AS(compare_slopes({Rational(-1)}, {Rational(1)}), precondition_error);
  }
}

TEST_CASE("slope inequality holds end to end on the catalog") {
  for (const ModuleFile& mf : catalog_all()) {
    RadiiProfile profile = radii_profile(mf.op);
    std::vector<Rational> alpha;
    if (mf.declared_alpha) {
      InferResult res = infer_padic(profile, InferMode::declared, mf.declared_alpha);
      CHECK(res.ok);
      alpha = *mf.declared_alpha;
    } else {
      InferResult res = infer_padic(profile, InferMode::certify);
      REQUIRE(res.certificate == "exact");
      alpha = res.values;
    }
    SlopeComparison cmp = compare_slopes(alpha, formal_slopes(mf.op));
    CHECK(cmp.ok);
  }
}
