#include <doctest.h>

#include <numeric>

#include "padiff/errors.hpp"
#include "padiff/ramify.hpp"

using namespace padiff;

TEST_CASE("semidirect groups carry the expected filtrations") {
  SUBCASE("(4, 3): order 12, wild part F_4, two filtration steps") {
    SemidirectGroup sg = build_semidirect(4, 3);
    CHECK(sg.filtered.group.order() == 12);
    CHECK(sg.n == 3);
    REQUIRE(sg.filtered.lower.size() == 3);
    CHECK(sg.filtered.lower[1].size() == 4);
    CHECK(sg.filtered.lower[2].size() == 1);
  }
  SUBCASE("(4, 6): order 24, G_1 = G_2 of order 4") {
    SemidirectGroup sg = build_semidirect(4, 6);
    CHECK(sg.filtered.group.order() == 24);
    CHECK(sg.n == 3);
    REQUIRE(sg.filtered.lower.size() == 4);
    CHECK(sg.filtered.lower[1] == sg.filtered.lower[2]);
    CHECK(sg.filtered.lower[1].size() == 4);
  }
  SUBCASE("(2, 1): the degenerate cyclic group of order 2") {
    SemidirectGroup sg = build_semidirect(2, 1);
    CHECK(sg.filtered.group.order() == 2);
    CHECK(sg.filtered.group.element_order(1) == 2);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(build_semidirect(8, 3), precondition_error);   // ord_2 mod 3 = 2 != 3
    CHECK_THROWS_AS(build_semidirect(4, 5), precondition_error);   // ord_2 mod 5 = 4 != 2
    CHECK_THROWS_AS(build_semidirect(12, 3), precondition_error);  // not a prime power
  }
}

TEST_CASE("SL_2(F_3) data") {
  auto [fg, table] = sl2f3();
  CHECK(fg.group.order() == 24);
  CHECK(fg.lower[1].size() == 8);
  CHECK(fg.lower[2].size() == 2);
  CHECK(fg.lower[3].size() == 2);
  REQUIRE(table.rows.size() == 7);
  std::vector<long> dims;
  for (const auto& row : table.rows) dims.push_back(row.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
  // central element values
  std::size_t center_col = 1;  // class "-1"
  CHECK(table.row("3a").values[center_col] == Cyclotomic::from_rational(1, Rational(3)));
  CHECK(table.row("2a").values[center_col] == Cyclotomic::from_rational(1, Rational(-2)));
  // orthogonality holds exactly (verify also ran at construction)
  table.verify(fg.group);
}

TEST_CASE("upper numbering jumps") {
  CHECK(upper_jumps(build_semidirect_group(4, 3)) == std::vector<Rational>{rat(1, 3)});
  CHECK(upper_jumps(build_semidirect_group(4, 6)) == std::vector<Rational>{rat(1, 3)});
  CHECK(upper_jumps(sl2f3().first) == std::vector<Rational>{rat(1, 3), rat(1, 2)});

  UpperNumbering up = upper_numbering(sl2f3().first);
  CHECK(up.tame_jump);
  REQUIRE(up.groups.size() == 2);
  CHECK(up.groups[0].size() == 8);
  CHECK(up.groups[1].size() == 2);
}

TEST_CASE("Herbrand transform sanity") {
  for (long m : {3L, 6L}) {
    FilteredGroup fg = build_semidirect_group(4, m);
    UpperNumbering up = upper_numbering(fg);
    CHECK(up.phi_at_integers.front() == 0);
    for (std::size_t i = 1; i < up.phi_at_integers.size(); ++i)
      CHECK(up.phi_at_integers[i] > up.phi_at_integers[i - 1]);
    // concavity: increments |G_i|/|G_0| weakly decrease
    for (std::size_t i = 2; i < up.phi_at_integers.size(); ++i) {
      Rational prev = up.phi_at_integers[i - 1] - up.phi_at_integers[i - 2];
      Rational cur = up.phi_at_integers[i] - up.phi_at_integers[i - 1];
      CHECK(cur <= prev);
    }
  }
  // phi(1) = 1/n for the odd tower
  UpperNumbering up = upper_numbering(build_semidirect_group(4, 3));
  CHECK(up.phi_at_integers[1] == rat(1, 3));
}

TEST_CASE("swan and break decomposition on SL_2(F_3)") {
  auto [fg, table] = sl2f3();
  SUBCASE("2-dimensional character: pure of break 1/2") {
    BreakReport report = swan_and_breaks(fg, table, table.row("2a"));
    REQUIRE(report.breaks.size() == 1);
    CHECK(report.breaks[0] == std::pair<Rational, long>{rat(1, 2), 2});
    CHECK(report.swan == 1);
  }
  SUBCASE("3-dimensional character: pure of break 1/3") {
    BreakReport report = swan_and_breaks(fg, table, table.row("3a"));
    REQUIRE(report.breaks.size() == 1);
    CHECK(report.breaks[0] == std::pair<Rational, long>{rat(1, 3), 3});
    CHECK(report.swan == 1);
  }
  SUBCASE("trivial character: break 0, swan 0") {
    BreakReport report = swan_and_breaks(fg, table, table.row("1a"));
    REQUIRE(report.breaks.size() == 1);
    CHECK(report.breaks[0] == std::pair<Rational, long>{Rational(0), 1});
    CHECK(report.swan == 0);
  }
  SUBCASE("non-characters are rejected") {
    CharacterRow fake = table.row("2a");
    fake.values[2] = Cyclotomic::from_rational(1, Rational(1));
    CHECK_THROWS_AS(swan_and_breaks(fg, table, fake), precondition_error);
  }
}

TEST_CASE("swan integrality and purity for every irreducible") {
  auto check_group = [](const FilteredGroup& fg, const CharacterTable& table) {
    for (const auto& row : table.rows) {
      BreakReport report = swan_and_breaks(fg, table, row);
      CHECK(is_integer(report.swan));
      CHECK(report.swan >= 0);
      CHECK(report.breaks.size() == 1);  // irreducibles are pure
      long total = 0;
      for (const auto& [jump, mult] : report.breaks) total += mult;
      CHECK(total == row.dim());
    }
  };
  auto [fg, table] = sl2f3();
  check_group(fg, table);
  SemidirectGroup sd3 = build_semidirect(4, 3);
  check_group(sd3.filtered, character_table_semidirect(sd3));
  SemidirectGroup sd6 = build_semidirect(4, 6);
  check_group(sd6.filtered, character_table_semidirect(sd6));
}

TEST_CASE("character tables of the semidirect family") {
  SUBCASE("(4, 3): four classes, dims 1,1,1,3") {
    CharacterTable table = character_table_semidirect(4, 3);
    CHECK(table.class_reps.size() == 4);
    std::vector<long> dims;
    for (const auto& row : table.rows) dims.push_back(row.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<long>{1, 1, 1, 3});
  }
  SUBCASE("(4, 6): both induced families appear") {
    CharacterTable table = character_table_semidirect(4, 6);
    long chi = 0, lambda = 0;
    for (const auto& row : table.rows) {
      if (row.name.rfind("chi_", 0) == 0) {
        ++chi;
        CHECK(row.dim() == 3);
      }
      if (row.name.rfind("lambda_", 0) == 0) {
        ++lambda;
        CHECK(row.dim() == 3);
      }
    }
    CHECK(chi == 1);
    CHECK(lambda == 1);
    long dim_sq = 0;
    for (const auto& row : table.rows) dim_sq += row.dim() * row.dim();
    CHECK(dim_sq == 24);
  }
  SUBCASE("swan of the induced character matches the Bessel irregularity") {
    SemidirectGroup sg = build_semidirect(4, 3);
    CharacterTable table = character_table_semidirect(sg);
    BreakReport report = swan_and_breaks(sg.filtered, table, table.row("chi_1"));
    CHECK(report.swan == 1);
    REQUIRE(report.breaks.size() == 1);
    CHECK(report.breaks[0] == std::pair<Rational, long>{rat(1, 3), 3});
  }
  SUBCASE("degenerate (2, 1)") {
    CharacterTable table = character_table_semidirect(2, 1);
    CHECK(table.rows.size() == 2);
  }
}

TEST_CASE("Artin-Schreier layers compose") {
  SUBCASE("(3, 2): the determinant is zbar^2 - zbar, nonzero in F_4") {
    ArtinSchreierWitness w = artin_schreier_compose(3, 2);
    CHECK(w.composes);
    CHECK(w.q == 4);
    CHECK(w.a == 2);
    // zbar^2 - zbar = zbar^2 + zbar evaluates to 1 under g^2 = g + 1
    FqField f4(2, 2);
    long zbar = f4.element_of_order(3);
    CHECK(w.det_code == f4.sub(f4.mul(zbar, zbar), zbar));
    CHECK(w.det_code != 0);
  }
  SUBCASE("(1, p): trivial 1x1 determinant") {
    for (long p : {2L, 3L, 5L}) {
      ArtinSchreierWitness w = artin_schreier_compose(1, p);
      CHECK(w.composes);
      CHECK(w.det_code == 1);
    }
  }
  SUBCASE("(5, 2): a 4x4 Vandermonde over F_16") {
    ArtinSchreierWitness w = artin_schreier_compose(5, 2);
    CHECK(w.composes);
    CHECK(w.q == 16);
    CHECK(w.a == 4);
    CHECK(w.det_code != 0);
  }
  SUBCASE("(4, 3)") {
    ArtinSchreierWitness w = artin_schreier_compose(4, 3);
    CHECK(w.composes);
    CHECK(w.q == 9);
  }
  CHECK_THROWS_AS(artin_schreier_compose(4, 2), precondition_error);
  CHECK_THROWS_AS(artin_schreier_compose(3, 4), precondition_error);
}

TEST_CASE("quotient classification") {
  SUBCASE("(4, 3): normal subgroups 1, F_4, G") {
    QuotientRecord record = classify_quotients(build_semidirect(4, 3));
    CHECK(record.normal_subgroup_orders == std::vector<long>{1, 4, 12});
    CHECK(record.conforms);
  }
  SUBCASE("(4, 6): the central element of order 2 breaks conformity") {
    // (0, n) acts trivially and is central, so G/<(0,n)> is the order-12
    // group F_4 x| Z/3 -- not cyclic.  Exhaustive enumeration finds it.
    QuotientRecord record = classify_quotients(build_semidirect(4, 6));
    CHECK(record.normal_subgroup_orders == std::vector<long>{1, 2, 4, 8, 12, 24});
    CHECK(!record.conforms);
    bool found_noncyclic_12 = false;
    for (const auto& d : record.quotient_descriptions)
      if (d.find("order 12: not cyclic") != std::string::npos) found_noncyclic_12 = true;
    CHECK(found_noncyclic_12);
  }
  SUBCASE("(2, 1) conforms trivially") {
    QuotientRecord record = classify_quotients(build_semidirect(2, 1));
    CHECK(record.conforms);
    CHECK(record.normal_subgroup_orders == std::vector<long>{1, 2});
  }
}

TEST_CASE("jumps versus slopes") {
  FilteredGroup fg = sl2f3().first;
  CHECK(jumps_vs_slopes({rat(1, 2), rat(1, 2)}, fg));
  CHECK(jumps_vs_slopes({rat(1, 3), rat(1, 3), rat(1, 3)}, fg));
  CHECK(!jumps_vs_slopes({rat(1, 4)}, fg));
  // zero slopes need the tame jump
  CHECK(jumps_vs_slopes({Rational(0)}, fg));
}

TEST_CASE("filtration validation") {
  SemidirectGroup sg = build_semidirect(4, 3);
  // non-normal level: a single Z/3 factor is not normal in G
  std::vector<int> z3;
  for (int x = 0; x < 12; ++x)
    if (sg.elems[static_cast<std::size_t>(x)].first == 0) z3.push_back(x);
  CHECK_THROWS_AS(FilteredGroup(sg.filtered.group, {sg.filtered.lower[0], z3, {0}}, 2, {}, "bad"),
                  precondition_error);
}
