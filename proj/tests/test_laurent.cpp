#include <doctest.h>

#include "oracle_hull.hpp"
#include "padiff/errors.hpp"
#include "padiff/laurent.hpp"

using namespace padiff;

namespace {

LaurentElement from_terms(long p, std::initializer_list<std::pair<long, long>> terms) {
  std::map<long, PiScalar> m;
  for (const auto& [exp, value] : terms) m.emplace(exp, PiScalar::from_long(p, value));
  return LaurentElement(p, std::move(m));
}

}  // namespace

TEST_CASE("ord_x") {
  CHECK(LaurentElement::x(2).ord_x() == 1);
  // (x - 16)/x^3 stored as {-3: -16, -2: 1}
  CHECK(from_terms(2, {{-3, -16}, {-2, 1}}).ord_x() == -3);
  CHECK(from_terms(2, {{-3, -4}}).ord_x() == -3);
  CHECK_THROWS_WITH_AS(LaurentElement(2).ord_x(), "ord of zero", precondition_error);
}

TEST_CASE("derive") {
  // x^2 -> 2x
  CHECK(from_terms(3, {{2, 1}}).derive() == from_terms(3, {{1, 2}}));
  // pi x^(-2) at p = 2 (pi = -2) -> 4 x^(-3)
  LaurentElement f = LaurentElement::monomial(2, -2, PiScalar::pi(2));
  CHECK(f.derive() == from_terms(2, {{-3, 4}}));
  // constants die
  CHECK(from_terms(5, {{0, 5}}).derive().is_zero());
  // tail bound shifts down with unchanged vp_min
  LaurentElement tailed(2, {{0, PiScalar::one(2)}}, TailBound{4, rat(3, 2)});
  LaurentElement d = from_terms(2, {{1, 2}}) + tailed;  // make the stored part survive
  LaurentElement dd = d.derive();
  REQUIRE(dd.tail().has_value());
  CHECK(dd.tail()->from == 3);
  CHECK(dd.tail()->vp_min == rat(3, 2));
}

TEST_CASE("laurent invariants") {
  CHECK_THROWS_AS(LaurentElement(2, {{0, PiScalar::one(2)}}, TailBound{0, Rational(0)}),
                  precondition_error);
  CHECK_THROWS_AS(LaurentElement(2, {}, TailBound{3, Rational(0)}), precondition_error);
  // zero coefficients are dropped
  LaurentElement z(3, {{1, PiScalar::zero(3)}});
  CHECK(z.is_zero());
}

TEST_CASE("gauss envelope on monomials and binomials") {
  GaussEnvelope ex = gauss_envelope(LaurentElement::x(2));
  CHECK(ex.envelope.pieces().size() == 1);
  CHECK(ex.envelope.pieces()[0] == AffinePiece{Rational(0), Rational(1)});
  CHECK(ex.certified_everywhere());

  // 2 + x at p = 2: v(s) = s on (0,1], 1 afterwards
  GaussEnvelope e2 = gauss_envelope(from_terms(2, {{0, 2}, {1, 1}}));
  REQUIRE(e2.envelope.pieces().size() == 2);
  CHECK(e2.envelope.breakpoints() == std::vector<Rational>{Rational(1)});
  CHECK(e2.envelope.pieces()[0] == AffinePiece{Rational(0), Rational(1)});
  CHECK(e2.envelope.pieces()[1] == AffinePiece{Rational(1), Rational(0)});

  // -4/x^3 at p = 2: single piece 2 - 3s
  GaussEnvelope e3 = gauss_envelope(from_terms(2, {{-3, -4}}));
  CHECK(e3.envelope.pieces().size() == 1);
  CHECK(e3.envelope.pieces()[0] == AffinePiece{Rational(2), Rational(-3)});

  CHECK_THROWS_AS(gauss_envelope(LaurentElement(2)), precondition_error);
}

TEST_CASE("gauss envelope is concave") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentElement f = rng.laurent(2, true);
    CHECK(gauss_envelope(f).envelope.slopes_weakly_decreasing());
  }
}

TEST_CASE("gauss envelope equals the direct minimum scan") {
  oracle::Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    long p = trial % 3 == 0 ? 5 : (trial % 3 == 1 ? 3 : 2);
    LaurentElement f = rng.laurent(p, true);
    GaussEnvelope env = gauss_envelope(f);
    for (int probe = 0; probe < 8; ++probe) {
      Rational s = rng.sample_s();
      CHECK(env.envelope.at(s) == oracle::direct_valuation(f, s));
    }
  }
}

TEST_CASE("tail certification") {
  // 1 + O(x^5) with weak bound vp >= -10: line -10 + 5s crosses 0 at s = 2
  LaurentElement f(2, {{0, PiScalar::one(2)}}, TailBound{5, Rational(-10)});
  GaussEnvelope env = gauss_envelope(f);
  CHECK(env.certified_from == 2);
  // strong bound certifies everywhere
  LaurentElement g(2, {{0, PiScalar::one(2)}}, TailBound{5, Rational(1)});
  CHECK(gauss_envelope(g).certified_everywhere());
}

TEST_CASE("dominance threshold") {
  CHECK(dominance_threshold(from_terms(2, {{-3, -4}})) == 0);
  CHECK(dominance_threshold(from_terms(2, {{0, 2}, {1, 1}})) == 1);
  // x^(-1) + p x^(-2) at p = 3: vp gap 1 over exponent gap 1
  CHECK(dominance_threshold(from_terms(3, {{-1, 1}, {-2, 3}})) == 1);
  // matches the last envelope breakpoint by definition
  oracle::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentElement f = rng.laurent(3, true);
    GaussEnvelope env = gauss_envelope(f);
    CHECK(dominance_threshold(f) ==
          (env.envelope.breakpoints().empty() ? Rational(0) : env.envelope.breakpoints().back()));
  }
  // a tail that fails to certify the dominance region errors out
  LaurentElement weak(2, {{0, PiScalar::one(2)}}, TailBound{5, Rational(-10)});
  CHECK_THROWS_AS(dominance_threshold(weak), precondition_error);
}

TEST_CASE("lmul") {
  CHECK(lmul(LaurentElement::x(2), from_terms(2, {{-1, 1}})) == LaurentElement::one(2));
  CHECK(lmul(from_terms(2, {{0, 2}, {1, 1}}), from_terms(2, {{0, 2}, {1, -1}})) ==
        from_terms(2, {{0, 4}, {2, -1}}));

  // envelope additivity for the worked pair f = 2 + x, g = x^(-1)
  LaurentElement f = from_terms(2, {{0, 2}, {1, 1}});
  LaurentElement g = from_terms(2, {{-1, 1}});
  CHECK(gauss_envelope(lmul(f, g)).envelope ==
        pw_add(gauss_envelope(f).envelope, gauss_envelope(g).envelope));
}

TEST_CASE("envelope additivity under products") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    long p = trial % 2 == 0 ? 2 : 3;
    LaurentElement f = rng.laurent(p, true);
    LaurentElement g = rng.laurent(p, true);
    CHECK(gauss_envelope(lmul(f, g)).envelope ==
          pw_add(gauss_envelope(f).envelope, gauss_envelope(g).envelope));
  }
}

TEST_CASE("ultrametric inequality for sums") {
  oracle::Rng rng(29);
  std::vector<Rational> samples = {rat(1, 7), rat(1, 2), Rational(1), rat(3, 2), Rational(4)};
  for (int trial = 0; trial < 80; ++trial) {
    LaurentElement f = rng.laurent(2, true);
    LaurentElement g = rng.laurent(2, true);
    LaurentElement sum = f + g;
    if (sum.is_zero()) continue;
    GaussEnvelope ef = gauss_envelope(f), eg = gauss_envelope(g), es = gauss_envelope(sum);
    for (const auto& s : samples)
      CHECK(es.envelope.at(s) >= rat_min(ef.envelope.at(s), eg.envelope.at(s)));
  }
}

TEST_CASE("tail bounds propagate conservatively") {
  LaurentElement f(2, {{-1, PiScalar::one(2)}}, TailBound{2, Rational(3)});
  LaurentElement g = from_terms(2, {{1, 2}});
  LaurentElement prod = lmul(f, g);
  REQUIRE(prod.tail().has_value());
  CHECK(prod.tail()->from == 3);  // tail_from + ord(g)
  CHECK(prod.tail()->vp_min == 4);
  // addition folds overlapping stored terms into the tail
  LaurentElement h(2, {{0, PiScalar::one(2)}, {3, PiScalar::from_long(2, 8)}});
  LaurentElement sum = f + h;
  REQUIRE(sum.tail().has_value());
  CHECK(sum.tail()->from == 2);
  CHECK(sum.tail()->vp_min == 3);  // folded x^3 term has vp 3
  CHECK(sum.terms().count(3) == 0);
}

TEST_CASE("exact division") {
  LaurentElement f = from_terms(2, {{0, 4}, {2, -1}});
  LaurentElement g = from_terms(2, {{0, 2}, {1, 1}});
  auto q = try_divide(f, g);
  REQUIRE(q.has_value());
  CHECK(*q == from_terms(2, {{0, 2}, {1, -1}}));
  CHECK(!try_divide(from_terms(2, {{0, 1}, {1, 1}}), from_terms(2, {{0, 2}, {2, 1}})).has_value());
  CHECK_THROWS_AS(try_divide(f, LaurentElement(2)), precondition_error);
}

TEST_CASE("piecewise affine validation") {
  CHECK_THROWS_AS(PiecewiseAffine(Rational(0), std::nullopt, {Rational(1)},
                                  {AffinePiece{Rational(0), Rational(1)},
                                   AffinePiece{Rational(5), Rational(0)}}),
                  precondition_error);
  PiecewiseAffine ok(Rational(0), std::nullopt, {Rational(1)},
                     {AffinePiece{Rational(0), Rational(1)}, AffinePiece{Rational(1), Rational(0)}});
  CHECK(ok.at(rat(1, 2)) == rat(1, 2));
  CHECK(ok.at(Rational(5)) == 1);
  CHECK_THROWS_AS(ok.at(Rational(0)), precondition_error);
  CHECK_THROWS_AS(PiecewiseAffine(Rational(2), Rational(1), {}, {AffinePiece{Rational(0), Rational(0)}}),
                  precondition_error);
}
