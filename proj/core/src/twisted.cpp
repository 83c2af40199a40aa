#include "padiff/twisted.hpp"

#include <algorithm>

#include "padiff/errors.hpp"

namespace padiff {

namespace {

void trim(std::vector<LaurentElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using LMatrix = std::vector<std::vector<LaurentElement>>;

LaurentElement determinant(const LMatrix& m, long p) {
  std::size_t n = m.size();
  if (n == 0) return LaurentElement::one(p);
  if (n == 1) return m[0][0];
  LaurentElement det(p);
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r][0].is_zero()) continue;
    LMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    LaurentElement term = lmul(m[r][0], determinant(minor, p));
    det += (r % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

TwistedOperator::TwistedOperator(long p, std::vector<LaurentElement> coefficients)
    : p_(p), coeff_(std::move(coefficients)) {
  for (const auto& c : coeff_)
    if (c.prime() != p_) throw precondition_error("mixed primes in twisted operator");
  trim(coeff_);
}

TwistedOperator TwistedOperator::zero(long p) { return TwistedOperator(p, {}); }

const LaurentElement& TwistedOperator::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeff_.size()))
    throw precondition_error("coefficient index out of range");
  return coeff_[static_cast<std::size_t>(i)];
}

bool TwistedOperator::is_monic() const {
  return !coeff_.empty() && coeff_.back().is_one();
}

void TwistedOperator::require_monic_nonconstant(const char* op_name) const {
  if (!is_monic() || degree() < 1)
    throw precondition_error(std::string(op_name) + " requires a monic operator of degree >= 1");
}

TwistedOperator TwistedOperator::operator-() const {
  std::vector<LaurentElement> out;
  out.reserve(coeff_.size());
  for (const auto& c : coeff_) out.push_back(-c);
  return TwistedOperator(p_, std::move(out));
}

TwistedOperator operator+(const TwistedOperator& a, const TwistedOperator& b) {
  if (a.p_ != b.p_) throw precondition_error("mixed primes in twisted arithmetic");
  std::vector<LaurentElement> out(std::max(a.coeff_.size(), b.coeff_.size()),
                                  LaurentElement(a.p_));
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) out[i] += a.coeff_[i];
  for (std::size_t i = 0; i < b.coeff_.size(); ++i) out[i] += b.coeff_[i];
  return TwistedOperator(a.p_, std::move(out));
}

TwistedOperator operator-(const TwistedOperator& a, const TwistedOperator& b) {
  return a + (-b);
}

bool TwistedOperator::operator==(const TwistedOperator& o) const {
  return p_ == o.p_ && coeff_ == o.coeff_;
}

TwistedOperator scalar_mul(const LaurentElement& a, const TwistedOperator& u) {
  std::vector<LaurentElement> out;
  out.reserve(u.coeffs().size());
  for (const auto& c : u.coeffs()) out.push_back(lmul(a, c));
  return TwistedOperator(u.prime(), std::move(out));
}

TwistedOperator tmul(const TwistedOperator& u, const TwistedOperator& v) {
  if (u.prime() != v.prime()) throw precondition_error("mixed primes in twisted arithmetic");
  long p = u.prime();
  if (u.is_zero() || v.is_zero()) return TwistedOperator::zero(p);

  // w_i = T^i * v, built by repeated application of T*a = a*T + d(a).
  std::vector<LaurentElement> w = v.coeffs();
  TwistedOperator acc = scalar_mul(u.coeff(0), TwistedOperator(p, w));
  for (long i = 1; i <= u.degree(); ++i) {
    std::vector<LaurentElement> next(w.size() + 1, LaurentElement(p));
    for (std::size_t j = 0; j < w.size(); ++j) {
      next[j + 1] += w[j];
      next[j] += w[j].derive();
    }
    w = std::move(next);
    acc = acc + scalar_mul(u.coeff(i), TwistedOperator(p, w));
  }
  return acc;
}

TwistedOperator expand_theta(long p, const std::vector<LaurentElement>& theta_coeffs) {
  if (theta_coeffs.empty() || !theta_coeffs.back().is_one())
    throw precondition_error("theta-form input must be monic");
  long n = static_cast<long>(theta_coeffs.size()) - 1;

  TwistedOperator theta(p, {LaurentElement::zero(p), LaurentElement::x(p)});
  TwistedOperator theta_pow(p, {LaurentElement::one(p)});
  TwistedOperator acc = scalar_mul(theta_coeffs[0], theta_pow);
  for (long k = 1; k <= n; ++k) {
    theta_pow = tmul(theta, theta_pow);
    acc = acc + scalar_mul(theta_coeffs[static_cast<std::size_t>(k)], theta_pow);
  }

  // Leading coefficient of the expansion is x^n; divide on the left.
  std::vector<LaurentElement> out;
  out.reserve(acc.coeffs().size());
  for (const auto& c : acc.coeffs()) out.push_back(c.shifted(-n));
  TwistedOperator result(p, std::move(out));
  if (!result.is_monic()) throw internal_error("theta expansion failed to normalize");
  return result;
}

SystemMatrix companion_system(const TwistedOperator& ell) {
  ell.require_monic_nonconstant("companion_system");
  long p = ell.prime();
  long n = ell.degree();
  SystemMatrix sys;
  sys.p = p;
  sys.theta_form = false;
  sys.entries.assign(static_cast<std::size_t>(n),
                     std::vector<LaurentElement>(static_cast<std::size_t>(n), LaurentElement(p)));
  for (long i = 0; i + 1 < n; ++i)
    sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] =
        LaurentElement::one(p);
  for (long j = 0; j < n; ++j)
    sys.entries[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)] = -ell.coeff(j);
  return sys;
}

CyclicForm cyclic_form(const SystemMatrix& system, std::uint64_t seed) {
  long n = system.size();
  if (n < 1) throw precondition_error("empty system");
  long p = system.p;
  for (const auto& row : system.entries) {
    if (static_cast<long>(row.size()) != n) throw precondition_error("system matrix must be square");
    for (const auto& e : row)
      if (!e.is_tail_free()) throw precondition_error("cyclic form requires tail-free entries");
  }

  // Work in d/dx form; a theta system acts through x * d/dx.
  std::vector<std::vector<LaurentElement>> a = system.entries;
  if (system.theta_form)
    for (auto& row : a)
      for (auto& e : row) e = e.shifted(-1);

  // D(v)_j = d(v_j) + sum_i v_i a[i][j]
  auto apply_d = [&](const std::vector<LaurentElement>& v) {
    std::vector<LaurentElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
      LaurentElement e = v[static_cast<std::size_t>(j)].derive();
      for (long i = 0; i < n; ++i)
        e += lmul(v[static_cast<std::size_t>(i)],
                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      out.push_back(std::move(e));
    }
    return out;
  };

  // Candidate list: basis vectors, then e_i + x^k e_j over a small exponent
  // range, in a canonical order; a nonzero seed shuffles it.
  struct Candidate {
    long i, j, k;
    bool pair;
  };
  std::vector<Candidate> candidates;
  for (long i = 0; i < n; ++i) candidates.push_back({i, 0, 0, false});
  for (long k : {0L, 1L, -1L, 2L, -2L, 3L, -3L})
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        if (i != j) candidates.push_back({i, j, k, true});
  if (candidates.size() > static_cast<std::size_t>(kCyclicSearchBound))
    candidates.resize(static_cast<std::size_t>(kCyclicSearchBound));
  if (seed != 0) {
    std::uint64_t state = seed;
    for (std::size_t i = candidates.size(); i > 1; --i)
      std::swap(candidates[i - 1], candidates[splitmix64(state) % i]);
  }

  long attempts = 0;
  for (const Candidate& cand : candidates) {
    ++attempts;
    std::vector<LaurentElement> m(static_cast<std::size_t>(n), LaurentElement(p));
    m[static_cast<std::size_t>(cand.i)] = LaurentElement::one(p);
    if (cand.pair)
      m[static_cast<std::size_t>(cand.j)] += LaurentElement::monomial(p, cand.k, PiScalar::one(p));

    std::vector<std::vector<LaurentElement>> iterates;
    iterates.push_back(m);
    for (long d = 0; d < n; ++d) iterates.push_back(apply_d(iterates.back()));

    // Transition matrix with column d the coordinates of D^d m.
    LMatrix trans(static_cast<std::size_t>(n),
                  std::vector<LaurentElement>(static_cast<std::size_t>(n), LaurentElement(p)));
    for (long d = 0; d < n; ++d)
      for (long r = 0; r < n; ++r)
        trans[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] =
            iterates[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)];

    LaurentElement det = determinant(trans, p);
    if (det.is_zero()) continue;

    // Cramer solve of trans * c = D^n m; coefficients must stay Laurent.
    std::vector<LaurentElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    bool laurent_ok = true;
    for (long d = 0; d < n; ++d) {
      LMatrix replaced = trans;
      for (long r = 0; r < n; ++r)
        replaced[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] =
            iterates[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
      std::optional<LaurentElement> c = try_divide(determinant(replaced, p), det);
      if (!c) {
        laurent_ok = false;
        break;
      }
      coeffs.push_back(-*c);  // D^n m + sum a_d D^d m = 0
    }
    if (!laurent_ok) continue;

    coeffs.push_back(LaurentElement::one(p));
    TwistedOperator ell(p, coeffs);

    // Direct verification of the annihilation relation.
    std::vector<LaurentElement> residual = iterates[static_cast<std::size_t>(n)];
    for (long d = 0; d < n; ++d)
      for (long r = 0; r < n; ++r)
        residual[static_cast<std::size_t>(r)] +=
            lmul(ell.coeff(d), iterates[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)]);
    for (const auto& r : residual)
      if (!r.is_zero()) throw internal_error("cyclic form verification failed");

    return CyclicForm{std::move(ell), std::move(m), std::move(det), attempts};
  }
  throw precondition_error("no cyclic vector found among " + std::to_string(attempts) +
                           " candidates; widen the search");
}

}  // namespace padiff
