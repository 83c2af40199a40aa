#include <doctest.h>

#include <sstream>

#include "oracle_hull.hpp"
#include "padiff/errors.hpp"
#include "padiff/io.hpp"

using namespace padiff;

namespace {

LaurentElement lmono(long p, long exp, long value) {
  return LaurentElement::monomial(p, exp, PiScalar::from_long(p, value));
}

}  // namespace

TEST_CASE("catalog operators") {
  SUBCASE("bessel(2,2) in T-form") {
    ModuleFile mf = catalog_bessel(2, 2);
    CHECK(mf.op == TwistedOperator(2, {lmono(2, -3, -4), lmono(2, -1, 1), LaurentElement::one(2)}));
  }
  SUBCASE("bessel(1,p) is first order with formal slope 1") {
    for (long p : {2L, 5L}) {
      ModuleFile mf = catalog_bessel(1, p);
      CHECK(mf.op.degree() == 1);
      CHECK(mf.op.coeff(0).ord_x() == -2);
      CHECK(formal_slopes(mf.op) == std::vector<Rational>{Rational(1)});
    }
  }
  SUBCASE("bessel(3,2) has slopes 1/3") {
    CHECK(formal_slopes(catalog_bessel(3, 2).op) ==
          std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
  }
  SUBCASE("exp family") {
    ModuleFile e1 = catalog_exp(1, 2);
    CHECK(e1.op == TwistedOperator(2, {lmono(2, -2, -2), LaurentElement::one(2)}));
    CHECK(formal_slopes(e1.op) == std::vector<Rational>{Rational(1)});
    REQUIRE(e1.declared_alpha.has_value());
    CHECK(*e1.declared_alpha == std::vector<Rational>{Rational(1)});

    ModuleFile e2 = catalog_exp(2, 2);
    CHECK(formal_slopes(e2.op) == std::vector<Rational>{Rational(2)});
    CHECK(*e2.declared_alpha == std::vector<Rational>{Rational(1)});

    ModuleFile e4 = catalog_exp(4, 2);
    CHECK(formal_slopes(e4.op) == std::vector<Rational>{Rational(4)});
    CHECK(*e4.declared_alpha == std::vector<Rational>{Rational(1)});

    // k = 3 is not a power of 2: no declared metadata
    CHECK(!catalog_exp(3, 2).declared_alpha.has_value());
    // powers of odd primes carry the metadata too
    ModuleFile e33 = catalog_exp(3, 3);
    CHECK(formal_slopes(e33.op) == std::vector<Rational>{Rational(3)});
    REQUIRE(e33.declared_alpha.has_value());
    CHECK(*e33.declared_alpha == std::vector<Rational>{Rational(1)});
    InferResult res = infer_padic(radii_profile(e33.op), InferMode::declared, e33.declared_alpha);
    CHECK(res.ok);
  }
  SUBCASE("adjoint operator matches its closed form") {
    ModuleFile mf = catalog_adjoint_bessel2();
    CHECK(mf.op.coeff(0) == lmono(2, -4, 8));
    CHECK(mf.op.coeff(1) == lmono(2, -3, -16) + lmono(2, -2, 1));
    CHECK(mf.op.coeff(2) == lmono(2, -1, 3));
    REQUIRE(mf.declared_alpha.has_value());
    CHECK(*mf.declared_alpha == std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
  }
  CHECK_THROWS_AS(catalog_bessel(0, 2), precondition_error);
  CHECK_THROWS_AS(catalog_bessel(2, 4), precondition_error);
}

TEST_CASE("module files round trip") {
  for (const ModuleFile& mf : catalog_all()) {
    ModuleFile parsed = parse_module_file(write_module_file(mf));
    CHECK(parsed.op == mf.op);
    CHECK(parsed.label == mf.label);
    CHECK(parsed.declared_alpha == mf.declared_alpha);
  }
  // tail bounds survive the trip
  ModuleFile tailed{
      TwistedOperator(3, {LaurentElement(3, {{-2, PiScalar::pi(3)}}, TailBound{4, rat(5, 2)}),
                          LaurentElement::one(3)}),
      "with tail", std::nullopt};
  ModuleFile parsed = parse_module_file(write_module_file(tailed));
  CHECK(parsed.op == tailed.op);
}

TEST_CASE("module file validation") {
  CHECK_THROWS_AS(parse_module_file("not json"), parse_error);
  CHECK_THROWS_AS(parse_module_file("{}"), parse_error);
  CHECK_THROWS_AS(parse_module_file(R"({"p": 4, "degree": 1, "coefficients": []})"), parse_error);
  // non-monic: leading coefficient 2
  CHECK_THROWS_AS(parse_module_file(R"({"p": 2, "degree": 1, "coefficients": [
    {"power": 1, "laurent": [{"exp": 0, "coeff": ["2"]}]}]})"),
                  parse_error);
  // missing leading coefficient entirely
  CHECK_THROWS_AS(parse_module_file(R"({"p": 2, "degree": 2, "coefficients": [
    {"power": 0, "laurent": [{"exp": 0, "coeff": ["1"]}]}]})"),
                  parse_error);
  // wrong PiScalar arity for p = 3
  CHECK_THROWS_AS(parse_module_file(R"({"p": 3, "degree": 1, "coefficients": [
    {"power": 1, "laurent": [{"exp": 0, "coeff": ["1"]}]}]})"),
                  parse_error);
  // tail below the stored exponents
  CHECK_THROWS_AS(parse_module_file(R"({"p": 2, "degree": 1, "coefficients": [
    {"power": 1, "laurent": [{"exp": 0, "coeff": ["1"]}]},
    {"power": 0, "laurent": [{"exp": 3, "coeff": ["1"]}], "tail_from": 2, "tail_vp_min": "0"}]})"),
                  parse_error);
  // tail fields must come together
  CHECK_THROWS_AS(parse_module_file(R"({"p": 2, "degree": 1, "coefficients": [
    {"power": 1, "laurent": [{"exp": 0, "coeff": ["1"]}], "tail_from": 2}]})"),
                  parse_error);
}

TEST_CASE("reports are deterministic") {
  ModuleFile mf = catalog_bessel(2, 2);
  CHECK(formal_report(mf) == formal_report(mf));
  CHECK(parametric_report(mf) == parametric_report(mf));
  RadiiOptions options;
  options.at = Rational(3);
  CHECK(radii_report(mf, options) == radii_report(mf, options));
  CheckOutcome a = check_report(mf, InferMode::certify, std::nullopt);
  CheckOutcome b = check_report(mf, InferMode::certify, std::nullopt);
  CHECK(a.json == b.json);
  CHECK(!a.violation);
}

TEST_CASE("check report flags violations") {
  ModuleFile mf = catalog_exp(2, 2);
  // declared 2 exceeds the true slope 1: inconsistent declaration
  CheckOutcome bad = check_report(mf, InferMode::declared, std::vector<Rational>{Rational(2)});
  CHECK(bad.violation);
  CheckOutcome good = check_report(mf, InferMode::declared, std::vector<Rational>{Rational(1)});
  CHECK(!good.violation);
  CheckOutcome bound = check_report(mf, InferMode::bound, std::nullopt);
  CHECK(!bound.violation);
}

TEST_CASE("csv sampling agrees with exact evaluation") {
  RadiiProfile profile = radii_profile(catalog_bessel(2, 2).op);
  std::string csv = radii_csv(profile, 16);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "s,f_1,f_2,F_1,F_2");
  Rational span = rat_max(Rational(2) * 2, Rational(4));
  std::string line;
  long row = 0;
  while (std::getline(in, line)) {
    ++row;
    Rational s = span * rat(row, 16);
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 5);
    CHECK(fields[0] == decimal_string(s, kCsvSignificantDigits));
    for (long j = 0; j < 2; ++j) {
      auto v = evaluate_radius(profile.f[static_cast<std::size_t>(j)], s);
      CHECK(fields[static_cast<std::size_t>(1 + j)] ==
            (v ? decimal_string(*v, kCsvSignificantDigits) : "NA"));
      auto V = evaluate_radius(profile.F[static_cast<std::size_t>(j)], s);
      CHECK(fields[static_cast<std::size_t>(3 + j)] ==
            (V ? decimal_string(*V, kCsvSignificantDigits) : "NA"));
    }
  }
  CHECK(row == 16);
}

TEST_CASE("svg output is well formed") {
  ModuleFile mf = catalog_bessel(2, 2);
  std::string polygon_drawing = polygon_svg(formal_polygon(mf.op));
  CHECK(polygon_drawing.find("<svg") == 0);
  CHECK(polygon_drawing.rfind("</svg>\n") == polygon_drawing.size() - 7);
  std::string profile_drawing = profile_svg(radii_profile(mf.op));
  CHECK(profile_drawing.find("<svg") == 0);
  CHECK(profile_drawing.rfind("</svg>\n") == profile_drawing.size() - 7);
}

TEST_CASE("ramify reports") {
  std::string jumps = jumps_report(sl2f3().first);
  CHECK(jumps.find("\"1/3\"") != std::string::npos);
  CHECK(jumps.find("\"1/2\"") != std::string::npos);
  CHECK(jumps == jumps_report(sl2f3().first));  // deterministic

  std::string swan = swan_report_semidirect(4, 3, "");
  CHECK(swan.find("induced_family_swan_agrees") != std::string::npos);
  CHECK(swan.find("\"swan\": \"1\"") != std::string::npos);

  std::string table = table_report_semidirect(4, 6);
  CHECK(table.find("lambda_1") != std::string::npos);

  CHECK_THROWS_AS(swan_report_sl2f3("nope"), precondition_error);
}
