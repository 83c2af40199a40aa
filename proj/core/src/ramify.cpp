#include "padiff/ramify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "padiff/errors.hpp"

namespace padiff {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul_table) : mul_(std::move(mul_table)) {
  int n = order();
  if (n == 0) throw precondition_error("empty group");
  for (const auto& row : mul_)
    if (static_cast<int>(row.size()) != n) throw precondition_error("multiplication table not square");
  for (int x = 0; x < n; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      throw precondition_error("element 0 is not the identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw precondition_error("multiplication table is not associative");
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul(x, y) == 0) {
        inv_[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (inv_[static_cast<std::size_t>(x)] < 0) throw precondition_error("element without inverse");
  }

  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> cls;
    std::set<int> seen;
    for (int g = 0; g < n; ++g) seen.insert(mul(mul(g, x), inv(g)));
    cls.assign(seen.begin(), seen.end());
    int id = static_cast<int>(classes_.size());
    for (int y : cls) class_of_[static_cast<std::size_t>(y)] = id;
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::element_order(int x) const {
  int ord = 1;
  int cur = x;
  while (cur != 0) {
    cur = mul(cur, x);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(0)) return false;
  for (int x : s)
    for (int y : s)
      if (!s.count(mul(x, y))) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elements) const {
  if (!is_subgroup(elements)) return false;
  std::set<int> s(elements.begin(), elements.end());
  for (int g = 0; g < order(); ++g)
    for (int x : s)
      if (!s.count(mul(mul(g, x), inv(g)))) return false;
  return true;
}

FilteredGroup::FilteredGroup(FiniteGroup g, std::vector<std::vector<int>> lower_filtration,
                             long p_char, std::vector<std::string> names, std::string group_label)
    : group(std::move(g)), lower(std::move(lower_filtration)), p(p_char),
      element_names(std::move(names)), label(std::move(group_label)) {
  if (lower.size() < 2) throw precondition_error("filtration needs at least G_0 and a trivial tail");
  if (static_cast<int>(lower.front().size()) != group.order())
    throw precondition_error("G_0 must be the whole group");
  if (lower.back().size() != 1 || lower.back()[0] != 0)
    throw precondition_error("filtration must end at the trivial group");
  for (auto& level : lower) std::sort(level.begin(), level.end());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!group.is_normal(lower[i]))
      throw precondition_error("filtration level " + std::to_string(i) + " is not normal");
    if (i > 0 && !std::includes(lower[i - 1].begin(), lower[i - 1].end(),
                                lower[i].begin(), lower[i].end()))
      throw precondition_error("filtration is not decreasing");
  }
  // G_1 is the wild part: a p-group.
  std::size_t wild = lower.size() > 1 ? lower[1].size() : 1;
  while (wild % static_cast<std::size_t>(p) == 0) wild /= static_cast<std::size_t>(p);
  if (wild != 1) throw precondition_error("G_1 is not a p-group");
}

long CharacterRow::dim() const {
  // Column 0 is the identity class by construction.
  return values.at(0).rational_value().get_num().get_si();
}

const CharacterRow& CharacterTable::row(const std::string& name) const {
  for (const auto& r : rows)
    if (r.name == name) return r;
  std::string known;
  for (const auto& r : rows) known += (known.empty() ? "" : ", ") + r.name;
  throw precondition_error("no character named '" + name + "' (have: " + known + ")");
}

void CharacterTable::verify(const FiniteGroup& group) const {
  std::size_t k = class_reps.size();
  if (group.conjugacy_classes().size() != k)
    throw internal_error("character table class count mismatch");
  if (rows.size() != k) throw internal_error("character table must be square");
  long dim_sq = 0;
  for (const auto& r : rows) dim_sq += r.dim() * r.dim();
  if (dim_sq != group_order) throw internal_error("sum of squared dimensions != |G|");

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Cyclotomic acc = Cyclotomic::zero(1);
      for (std::size_t c = 0; c < k; ++c) {
        Cyclotomic term = rows[i].values[c] * rows[j].values[c].conj();
        acc += Cyclotomic::from_rational(1, Rational(class_sizes[c])) * term;
      }
      Cyclotomic want = Cyclotomic::from_rational(1, i == j ? Rational(group_order) : Rational(0));
      if (!(acc == want)) throw internal_error("row orthogonality fails");
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      Cyclotomic acc = Cyclotomic::zero(1);
      for (std::size_t i = 0; i < k; ++i) acc += rows[i].values[c] * rows[i].values[d].conj();
      Rational want = c == d ? Rational(group_order) / Rational(class_sizes[c]) : Rational(0);
      if (!(acc == Cyclotomic::from_rational(1, want)))
        throw internal_error("column orthogonality fails");
    }
  }
}

int SemidirectGroup::index_of(long alpha, long i) const {
  long ii = ((i % m) + m) % m;
  return static_cast<int>(ii * q + alpha);
}

SemidirectGroup build_semidirect(long q, long m) {
  auto [p, a] = prime_power_split(q);
  if (m < 1) throw precondition_error("m must be positive");

  // Recover n from m in {n, 2n}: the multiplicative order of p mod n must be a.
  auto valid_n = [&](long n) {
    return n >= 1 && std::gcd(n, p) == 1 && multiplicative_order(p, n) == a;
  };
  long n;
  if (valid_n(m)) {
    n = m;
  } else if (m % 2 == 0 && valid_n(m / 2)) {
    n = m / 2;
  } else {
    throw precondition_error("inconsistent parameters: need m in {n, 2n} with ord_p mod n = " +
                             std::to_string(a));
  }

  SemidirectGroup sg{
      FilteredGroup(FiniteGroup(std::vector<std::vector<int>>{{0}}), {{0}, {0}}, p, {"1"}, "placeholder"),
      std::make_shared<FqField>(p, a), n, m, q, 0, {}};
  sg.zbar = n == 1 ? 1 : sg.field->element_of_order(n);

  long order = q * m;
  for (long i = 0; i < m; ++i)
    for (long alpha = 0; alpha < q; ++alpha) sg.elems.push_back({alpha, i});

  // (alpha, i)(beta, j) = (alpha + zbar^(-i) beta, i + j)
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(order),
                                    std::vector<int>(static_cast<std::size_t>(order), 0));
  const FqField& F = *sg.field;
  for (long x = 0; x < order; ++x) {
    auto [alpha, i] = sg.elems[static_cast<std::size_t>(x)];
    long twist = F.pow(sg.zbar, -i);
    for (long y = 0; y < order; ++y) {
      auto [beta, j] = sg.elems[static_cast<std::size_t>(y)];
      mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          sg.index_of(F.add(alpha, F.mul(twist, beta)), i + j);
    }
  }

  std::vector<int> everyone(static_cast<std::size_t>(order));
  std::iota(everyone.begin(), everyone.end(), 0);
  std::vector<int> wild;
  for (long alpha = 0; alpha < q; ++alpha) wild.push_back(static_cast<int>(alpha));
  std::vector<std::vector<int>> lower;
  if (m == n) {
    lower = {everyone, wild, {0}};
  } else {
    lower = {everyone, wild, wild, {0}};
  }

  std::vector<std::string> names;
  for (long x = 0; x < order; ++x) {
    auto [alpha, i] = sg.elems[static_cast<std::size_t>(x)];
    names.push_back("(" + F.elem_str(alpha) + "," + std::to_string(i) + ")");
  }
  sg.filtered = FilteredGroup(FiniteGroup(std::move(mul)), std::move(lower), p,
                              std::move(names),
                              "F_" + std::to_string(q) + " x| Z/" + std::to_string(m));
  return sg;
}

FilteredGroup build_semidirect_group(long q, long m) {
  return build_semidirect(q, m).filtered;
}

CharacterTable character_table_semidirect(const SemidirectGroup& sg) {
  const FiniteGroup& G = sg.filtered.group;
  const FqField& F = *sg.field;
  long n = sg.n, m = sg.m, q = sg.q;
  long t_count = (q - 1) / n;
  long omega = F.generator();

  CharacterTable table;
  table.group_order = G.order();

  // Predicted class representatives and labels, checked against the brute
  // classes of the group.
  std::vector<std::pair<int, std::string>> predicted;
  predicted.push_back({sg.index_of(0, 0), "(0,0)"});
  for (long i = 1; i <= t_count; ++i)
    predicted.push_back({sg.index_of(F.pow(omega, i), 0), "(w^" + std::to_string(i) + ",0)"});
  if (m == 2 * n) {
    predicted.push_back({sg.index_of(0, n), "(0," + std::to_string(n) + ")"});
    for (long i = 1; i <= t_count; ++i)
      predicted.push_back({sg.index_of(F.pow(omega, i), n),
                           "(w^" + std::to_string(i) + "," + std::to_string(n) + ")"});
    for (long j = 1; j < m; ++j) {
      if (j == n) continue;
      predicted.push_back({sg.index_of(0, j), "(0," + std::to_string(j) + ")"});
    }
  } else {
    for (long j = 1; j < m; ++j)
      predicted.push_back({sg.index_of(0, j), "(0," + std::to_string(j) + ")"});
  }

  if (predicted.size() != G.conjugacy_classes().size())
    throw internal_error("class family count disagrees with the group");
  std::set<int> seen_classes;
  for (const auto& [rep, lbl] : predicted) {
    (void)lbl;
    if (!seen_classes.insert(G.class_of(rep)).second)
      throw internal_error("predicted class representatives collide");
  }

  for (const auto& [rep, lbl] : predicted) {
    table.class_reps.push_back(rep);
    table.class_labels.push_back(lbl);
    table.class_sizes.push_back(
        static_cast<long>(G.conjugacy_classes()[static_cast<std::size_t>(G.class_of(rep))].size()));
  }

  auto elem_of = [&](int idx) { return sg.elems[static_cast<std::size_t>(idx)]; };

  // Linear characters phi_t, t = 1..m: (alpha, j) -> zeta_m^(jt).
  for (long t = 1; t <= m; ++t) {
    CharacterRow row;
    row.name = "phi_" + std::to_string(t);
    for (int rep : table.class_reps) {
      auto [alpha, j] = elem_of(rep);
      (void)alpha;
      row.values.push_back(Cyclotomic::zeta_pow(m, j * t));
    }
    table.rows.push_back(std::move(row));
  }

  // Induced characters chi_l (and lambda_l for m = 2n):
  //   chi_l(alpha, j) = sum_{s=1}^{n} psi(omega^l * zbar^s * alpha) when n | j, else 0;
  //   lambda_l multiplies the j = n classes by -1.
  auto chi_value = [&](long l, long alpha) {
    Cyclotomic acc = Cyclotomic::zero(F.p());
    for (long s = 1; s <= n; ++s) {
      long arg = F.mul(F.pow(omega, l), F.mul(F.pow(sg.zbar, s), alpha));
      acc += psi_value(F, arg);
    }
    return acc;
  };
  for (long l = 1; l <= t_count; ++l) {
    CharacterRow row;
    row.name = "chi_" + std::to_string(l);
    for (int rep : table.class_reps) {
      auto [alpha, j] = elem_of(rep);
      row.values.push_back(j % n == 0 ? chi_value(l, alpha) : Cyclotomic::zero(F.p()));
    }
    table.rows.push_back(std::move(row));
  }
  if (m == 2 * n) {
    for (long l = 1; l <= t_count; ++l) {
      CharacterRow row;
      row.name = "lambda_" + std::to_string(l);
      for (int rep : table.class_reps) {
        auto [alpha, j] = elem_of(rep);
        if (j % n != 0) {
          row.values.push_back(Cyclotomic::zero(F.p()));
        } else {
          Cyclotomic v = chi_value(l, alpha);
          row.values.push_back(j == n ? -v : v);
        }
      }
      table.rows.push_back(std::move(row));
    }
  }

  table.verify(G);
  return table;
}

CharacterTable character_table_semidirect(long q, long m) {
  return character_table_semidirect(build_semidirect(q, m));
}

std::pair<FilteredGroup, CharacterTable> sl2f3() {
  // Matrices (a b; c d) over F_3 with det 1, identity first.
  struct Mat {
    int a, b, c, d;
  };
  std::vector<Mat> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  auto is_identity = [](const Mat& m) { return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1; };
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (is_identity(mats[i])) {
      std::swap(mats[0], mats[i]);
      break;
    }

  auto find = [&](const Mat& m) {
    for (std::size_t i = 0; i < mats.size(); ++i)
      if (mats[i].a == m.a && mats[i].b == m.b && mats[i].c == m.c && mats[i].d == m.d)
        return static_cast<int>(i);
    throw internal_error("matrix not found");
  };
  auto mat_mul = [](const Mat& x, const Mat& y) {
    auto md = [](int v) { return ((v % 3) + 3) % 3; };
    return Mat{md(x.a * y.a + x.b * y.c), md(x.a * y.b + x.b * y.d),
               md(x.c * y.a + x.d * y.c), md(x.c * y.b + x.d * y.d)};
  };

  int order = static_cast<int>(mats.size());
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(order),
                                    std::vector<int>(static_cast<std::size_t>(order), 0));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          find(mat_mul(mats[static_cast<std::size_t>(x)], mats[static_cast<std::size_t>(y)]));

  FiniteGroup G(std::move(mul));

  std::vector<int> q8, center;
  for (int x = 0; x < order; ++x) {
    int ord = G.element_order(x);
    if (ord == 1 || ord == 2 || ord == 4) q8.push_back(x);
    if (ord == 1 || ord == 2) center.push_back(x);
  }
  std::vector<int> everyone(static_cast<std::size_t>(order));
  std::iota(everyone.begin(), everyone.end(), 0);

  std::vector<std::string> names;
  for (const Mat& m : mats)
    names.push_back("[" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" +
                    std::to_string(m.c) + "," + std::to_string(m.d) + "]");

  FilteredGroup fg(std::move(G), {everyone, q8, center, center, {0}}, 2, std::move(names),
                   "SL_2(F_3)");

  // Classes: 1, -1, the six order-4 elements, and split order-3 / order-6
  // pairs.  The zeta_3 assignment pairs C6 = -C3 consistently.
  const FiniteGroup& grp = fg.group;
  int minus_one = -1;
  for (int x = 0; x < order; ++x)
    if (grp.element_order(x) == 2) minus_one = x;
  int h0 = -1;
  for (int x = 0; x < order; ++x)
    if (grp.element_order(x) == 3) {
      h0 = x;
      break;
    }
  int c1 = grp.class_of(0);
  int c2 = grp.class_of(minus_one);
  int c3a = grp.class_of(h0);
  int c6a = grp.class_of(grp.mul(minus_one, h0));
  int c4 = -1, c3b = -1, c6b = -1;
  for (std::size_t cls = 0; cls < grp.conjugacy_classes().size(); ++cls) {
    int rep = grp.conjugacy_classes()[cls][0];
    int ord = grp.element_order(rep);
    int id = static_cast<int>(cls);
    if (ord == 4) c4 = id;
    if (ord == 3 && id != c3a) c3b = id;
    if (ord == 6 && id != c6a) c6b = id;
  }
  if (grp.conjugacy_classes().size() != 7 || c4 < 0 || c3b < 0 || c6b < 0)
    throw internal_error("unexpected SL_2(F_3) class structure");

  CharacterTable table;
  table.group_order = order;
  std::vector<std::pair<int, std::string>> cols = {
      {c1, "1"},   {c2, "-1"},  {c4, "order4"}, {c3a, "order3a"},
      {c3b, "order3b"}, {c6a, "order6a"}, {c6b, "order6b"}};
  for (const auto& [cls, lbl] : cols) {
    table.class_reps.push_back(grp.conjugacy_classes()[static_cast<std::size_t>(cls)][0]);
    table.class_labels.push_back(lbl);
    table.class_sizes.push_back(
        static_cast<long>(grp.conjugacy_classes()[static_cast<std::size_t>(cls)].size()));
  }

  Cyclotomic w = Cyclotomic::zeta(3);
  Cyclotomic wb = w.conj();
  Cyclotomic one = Cyclotomic::one(1);
  Cyclotomic zero = Cyclotomic::zero(1);
  auto R = [](const Rational& r) { return Cyclotomic::from_rational(1, r); };
  auto add_row = [&](const std::string& name, std::vector<Cyclotomic> vals) {
    table.rows.push_back({name, std::move(vals)});
  };
  add_row("1a", {one, one, one, one, one, one, one});
  add_row("1b", {one, one, one, w, wb, w, wb});
  add_row("1c", {one, one, one, wb, w, wb, w});
  add_row("2a", {R(2), R(-2), zero, R(-1), R(-1), one, one});
  add_row("2b", {R(2), R(-2), zero, -w, -wb, w, wb});
  add_row("2c", {R(2), R(-2), zero, -wb, -w, wb, w});
  add_row("3a", {R(3), R(3), R(-1), zero, zero, zero, zero});

  table.verify(grp);
  return {std::move(fg), std::move(table)};
}

UpperNumbering upper_numbering(const FilteredGroup& fg) {
  UpperNumbering out;
  long g0 = static_cast<long>(fg.lower[0].size());
  out.tame_jump = fg.lower[1].size() < fg.lower[0].size();
  Rational phi(0);
  out.phi_at_integers.push_back(phi);
  for (std::size_t i = 1; i < fg.lower.size(); ++i) {
    phi += rat(static_cast<long>(fg.lower[i].size()), g0);
    out.phi_at_integers.push_back(phi);
    bool breaks_here = i + 1 < fg.lower.size()
                           ? fg.lower[i].size() > fg.lower[i + 1].size()
                           : fg.lower[i].size() > 1;
    if (i + 1 == fg.lower.size()) breaks_here = false;  // tail already trivial
    if (breaks_here) {
      out.jumps.push_back(phi);
      out.groups.push_back(fg.lower[i]);
    }
  }
  return out;
}

std::vector<Rational> upper_jumps(const FilteredGroup& fg) {
  return upper_numbering(fg).jumps;
}

BreakReport swan_and_breaks(const FilteredGroup& fg, const CharacterTable& table,
                            const CharacterRow& chi) {
  const FiniteGroup& G = fg.group;
  if (table.class_reps.size() != chi.values.size())
    throw precondition_error("character length does not match the table");

  // Map each element to its table column.
  std::vector<int> col_of_class(G.conjugacy_classes().size(), -1);
  for (std::size_t c = 0; c < table.class_reps.size(); ++c)
    col_of_class[static_cast<std::size_t>(G.class_of(table.class_reps[c]))] = static_cast<int>(c);
  auto chi_at = [&](int x) {
    int col = col_of_class[static_cast<std::size_t>(G.class_of(x))];
    if (col < 0) throw internal_error("class without a table column");
    return chi.values[static_cast<std::size_t>(col)];
  };

  auto fixed_dim = [&](const std::vector<int>& subgroup) {
    Cyclotomic acc = Cyclotomic::zero(1);
    for (int h : subgroup) acc += chi_at(h);
    if (!acc.is_rational()) throw precondition_error("not a character: fixed-space sum irrational");
    Rational total = acc.rational_value();
    Rational dim = total / Rational(static_cast<long>(subgroup.size()));
    if (!is_integer(dim) || dim < 0)
      throw precondition_error("not a character: fixed-space dimension " + to_string(dim));
    return dim.get_num().get_si();
  };

  UpperNumbering up = upper_numbering(fg);
  BreakReport report;
  report.swan = 0;

  long dim_total = chi.dim();
  long prev_fixed;
  if (up.jumps.empty()) {
    prev_fixed = dim_total;  // no wild part: everything breaks at 0
  } else {
    prev_fixed = fixed_dim(up.groups.front());
  }
  if (prev_fixed > 0) report.breaks.push_back({Rational(0), prev_fixed});
  for (std::size_t i = 0; i < up.jumps.size(); ++i) {
    long next_fixed = i + 1 < up.jumps.size() ? fixed_dim(up.groups[i + 1]) : dim_total;
    long mult = next_fixed - prev_fixed;
    if (mult < 0) throw precondition_error("not a character: fixed spaces not nested");
    if (mult > 0) {
      report.breaks.push_back({up.jumps[i], mult});
      report.swan += up.jumps[i] * Rational(mult);
    }
    prev_fixed = next_fixed;
  }
  long covered = 0;
  for (const auto& [jump, mult] : report.breaks) covered += mult;
  if (covered != dim_total) throw internal_error("break multiplicities do not sum to the dimension");
  return report;
}

ArtinSchreierWitness artin_schreier_compose(long n, long p) {
  if (n <= 0) throw precondition_error("n must be positive");
  if (!is_prime(p)) throw precondition_error("p must be prime");
  if (std::gcd(n, p) != 1) throw precondition_error("n and p must be coprime");
  long a = multiplicative_order(p, n);
  FqField F(p, a);
  long zbar = n == 1 ? 1 : F.element_of_order(n);

  // B[k][j] = zbar^(j * p^k), 0-based.
  std::vector<std::vector<long>> B(static_cast<std::size_t>(a),
                                   std::vector<long>(static_cast<std::size_t>(a), 0));
  long pk = 1;
  for (long k = 0; k < a; ++k) {
    for (long j = 0; j < a; ++j)
      B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = F.pow(zbar, j * pk);
    pk *= p;
  }

  // Cofactor determinant over F_q.
  std::function<long(const std::vector<std::vector<long>>&)> det =
      [&](const std::vector<std::vector<long>>& mat) -> long {
    std::size_t sz = mat.size();
    if (sz == 1) return mat[0][0];
    long acc = 0;
    for (std::size_t r = 0; r < sz; ++r) {
      if (mat[r][0] == 0) continue;
      std::vector<std::vector<long>> minor;
      for (std::size_t i = 0; i < sz; ++i) {
        if (i == r) continue;
        minor.emplace_back(mat[i].begin() + 1, mat[i].end());
      }
      long term = F.mul(mat[r][0], det(minor));
      acc = r % 2 == 0 ? F.add(acc, term) : F.sub(acc, term);
    }
    return acc;
  };
  long d = det(B);
  return {d != 0, F.q(), a, d, F.elem_str(d)};
}

QuotientRecord classify_quotients(const SemidirectGroup& sg) {
  const FiniteGroup& G = sg.filtered.group;
  int order = G.order();
  if (order > kQuotientEnumerationBound)
    throw precondition_error("group order exceeds the enumeration bound");

  // Normal subgroups are unions of conjugacy classes closed under product.
  const auto& classes = G.conjugacy_classes();
  std::size_t k = classes.size();
  if (k >= 32) throw precondition_error("too many conjugacy classes to enumerate");
  int identity_class = G.class_of(0);

  std::vector<std::vector<int>> normals;
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    if (!(mask & (1ULL << identity_class))) continue;
    std::vector<int> elems;
    for (std::size_t c = 0; c < k; ++c)
      if (mask & (1ULL << c)) elems.insert(elems.end(), classes[c].begin(), classes[c].end());
    if (order % static_cast<int>(elems.size()) != 0) continue;
    if (!G.is_subgroup(elems)) continue;
    std::sort(elems.begin(), elems.end());
    normals.push_back(std::move(elems));
  }
  std::sort(normals.begin(), normals.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });

  QuotientRecord record;
  record.conforms = true;
  for (const auto& nsub : normals) {
    record.normal_subgroup_orders.push_back(static_cast<long>(nsub.size()));
    if (nsub.size() == 1 || static_cast<int>(nsub.size()) == order) {
      record.quotient_descriptions.push_back(
          nsub.size() == 1 ? "G itself (trivial kernel)" : "trivial quotient");
      continue;
    }
    // Build the quotient on cosets and test cyclicity.
    std::set<int> in_n(nsub.begin(), nsub.end());
    std::vector<int> coset_of(static_cast<std::size_t>(order), -1);
    std::vector<int> reps;
    for (int x = 0; x < order; ++x) {
      if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int h : nsub) coset_of[static_cast<std::size_t>(G.mul(x, h))] = id;
    }
    long qorder = static_cast<long>(reps.size());
    bool cyclic = false;
    for (int rep : reps) {
      long ord = 1;
      int cur = rep;
      while (coset_of[static_cast<std::size_t>(cur)] != coset_of[0]) {
        cur = G.mul(cur, rep);
        ++ord;
      }
      if (ord == qorder) {
        cyclic = true;
        break;
      }
    }
    bool divides = sg.m % qorder == 0;
    if (!cyclic || !divides) record.conforms = false;
    record.quotient_descriptions.push_back(
        "order " + std::to_string(qorder) + (cyclic ? ": cyclic" : ": not cyclic") +
        (divides ? ", divides m" : ", does not divide m"));
  }
  return record;
}

bool jumps_vs_slopes(const std::vector<Rational>& alpha, const FilteredGroup& fg) {
  UpperNumbering up = upper_numbering(fg);
  for (const auto& a : alpha) {
    if (a == 0) {
      if (!up.tame_jump) return false;
      continue;
    }
    bool found = false;
    for (const auto& j : up.jumps)
      if (j == a) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace padiff
