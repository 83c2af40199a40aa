#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padiff/cyclotomic.hpp"
#include "padiff/fq.hpp"
#include "padiff/rational.hpp"

namespace padiff {

/// Small finite group given by its multiplication table; elements are the
/// indices 0..order-1 with 0 the identity.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> mul_table);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  int element_order(int x) const;

  bool is_subgroup(const std::vector<int>& elements) const;
  bool is_normal(const std::vector<int>& elements) const;

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// Finite group with an integer-indexed lower ramification filtration
/// G_0 >= G_1 >= ... >= G_N = 1.  Each G_i is normal in G_0 and G_1 is a
/// p-group; validated at construction.
struct FilteredGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> lower;  // lower[i] = G_i, element indices, sorted
  long p;
  std::vector<std::string> element_names;
  std::string label;

  FilteredGroup(FiniteGroup g, std::vector<std::vector<int>> lower_filtration, long p_char,
                std::vector<std::string> names, std::string group_label);
};

struct CharacterRow {
  std::string name;
  std::vector<Cyclotomic> values;  // one per class
  long dim() const;
};

struct CharacterTable {
  std::vector<int> class_reps;
  std::vector<long> class_sizes;
  std::vector<std::string> class_labels;
  std::vector<CharacterRow> rows;
  long group_order;

  const CharacterRow& row(const std::string& name) const;
  /// Exact row/column orthogonality and sum(dim^2) = |G|; throws internal_error.
  void verify(const FiniteGroup& group) const;
};

/// The Galois groups F_q x| Z/mZ of the Artin-Schreier-plus-Kummer towers,
/// with i acting as multiplication by zbar^(-i).  m = n gives the odd-n
/// tower (G_1 != G_2 = 1); m = 2n the even-rank tower (G_1 = G_2 != G_3 = 1).
struct SemidirectGroup {
  FilteredGroup filtered;
  std::shared_ptr<FqField> field;
  long n, m, q;
  long zbar;                             // element of order n generating the action
  std::vector<std::pair<long, long>> elems;  // index -> (alpha code, i)
  int index_of(long alpha, long i) const;
};

SemidirectGroup build_semidirect(long q, long m);

/// build_semidirect, as the plain filtered group.
FilteredGroup build_semidirect_group(long q, long m);

/// Character table per the semidirect family: linear characters phi_t and
/// induced characters chi_l (and lambda_l when m = 2n).
CharacterTable character_table_semidirect(long q, long m);
CharacterTable character_table_semidirect(const SemidirectGroup& sg);

/// SL_2(F_3) with lower filtration G >= Q8 >= {+-1} = {+-1} >= 1 and its
/// 7-row character table (verified by orthogonality at construction).
std::pair<FilteredGroup, CharacterTable> sl2f3();

/// Upper numbering data from the Herbrand transform phi (slope |G_i|/|G_0|
/// on (i-1, i)): positive jumps phi(b) over lower breaks b >= 1, plus the
/// tame jump at 0 when G_0 != G_1, reported separately.
struct UpperNumbering {
  bool tame_jump;
  std::vector<Rational> jumps;                 // positive, increasing
  std::vector<std::vector<int>> groups;        // G^{jump}, parallel to jumps
  std::vector<Rational> phi_at_integers;       // phi(0), phi(1), ..., phi(N)
};

UpperNumbering upper_numbering(const FilteredGroup& fg);
std::vector<Rational> upper_jumps(const FilteredGroup& fg);

struct BreakReport {
  std::vector<std::pair<Rational, long>> breaks;  // (jump, multiplicity), increasing
  Rational swan;
};

/// Break decomposition through successive fixed spaces under the
/// upper-numbering groups; Swan = sum of jump * multiplicity.
/// Throws precondition_error when the input is not a character
/// (non-integral fixed-space dimension).
BreakReport swan_and_breaks(const FilteredGroup& fg, const CharacterTable& table,
                            const CharacterRow& chi);

struct ArtinSchreierWitness {
  bool composes;     // always true by the Vandermonde argument; verified
  long q, a;
  long det_code;     // the determinant in F_q
  std::string det_string;
};

/// Vandermonde determinant det(zbar^((j-1)p^(k-1))) over F_q; nonzero iff
/// the a Artin-Schreier layers compose to the full w^q - w = 1/y extension.
ArtinSchreierWitness artin_schreier_compose(long n, long p);

struct QuotientRecord {
  std::vector<long> normal_subgroup_orders;
  bool conforms;  // every proper nontrivial quotient cyclic of order dividing m
  std::vector<std::string> quotient_descriptions;
};

/// Exhaustive normal-subgroup enumeration (unions of conjugacy classes);
/// checks that every proper nontrivial quotient is cyclic of order dividing m.
QuotientRecord classify_quotients(const SemidirectGroup& sg);

inline constexpr long kQuotientEnumerationBound = 64;

/// True iff every nonzero slope is an upper-numbering jump of G (and, when a
/// zero slope is present, the tame jump exists).
bool jumps_vs_slopes(const std::vector<Rational>& alpha, const FilteredGroup& fg);

}  // namespace padiff
