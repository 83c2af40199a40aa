#include "padiff/pi_scalar.hpp"

#include <algorithm>

#include "padiff/errors.hpp"

namespace padiff {

namespace {

// Dense polynomials over Q, used only for inversion mod Y^(p-1) + p.
using Poly = std::vector<Rational>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  if (b.empty()) throw internal_error("division by zero polynomial");
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
    q[shift] += c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) poly_trim(a);
  }
  return {q, a};
}

// Inverse of f modulo m via extended Euclid; m irreducible here.
Poly poly_invmod(Poly f, Poly m) {
  Poly r0 = m, r1 = f;
  Poly t0 = {}, t1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = r1;
    r1 = r;
    t0 = t1;
    t1 = t2;
  }
  if (r0.size() != 1) throw internal_error("modulus not irreducible in Q(pi) inversion");
  Rational lead = r0[0];
  for (auto& c : t0) c /= lead;
  return t0;
}

}  // namespace

PiScalar::PiScalar(long p) : p_(p), c_(static_cast<std::size_t>(p - 1), Rational(0)) {
  if (p < 2) throw precondition_error("prime must be >= 2");
}

PiScalar::PiScalar(long p, std::vector<Rational> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw precondition_error("prime must be >= 2");
  if (c_.size() != static_cast<std::size_t>(p - 1))
    throw precondition_error("PiScalar needs exactly p-1 coefficients");
}

PiScalar PiScalar::zero(long p) { return PiScalar(p); }

PiScalar PiScalar::one(long p) { return from_rational(p, Rational(1)); }

PiScalar PiScalar::pi(long p) {
  PiScalar out(p);
  if (p == 2) {
    out.c_[0] = Rational(-2);  // pi^(p-1) = -p with p-1 = 1
  } else {
    out.c_[1] = Rational(1);
  }
  return out;
}

PiScalar PiScalar::from_rational(long p, const Rational& value) {
  PiScalar out(p);
  out.c_[0] = value;
  return out;
}

PiScalar PiScalar::from_long(long p, long value) {
  return from_rational(p, Rational(value));
}

bool PiScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool PiScalar::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational PiScalar::rational_value() const {
  if (!is_rational()) throw precondition_error("PiScalar is not rational");
  return c_[0];
}

void PiScalar::check_compatible(const PiScalar& o) const {
  if (p_ != o.p_) throw precondition_error("mixed primes in PiScalar arithmetic");
}

PiScalar PiScalar::operator-() const {
  PiScalar out(*this);
  for (auto& q : out.c_) q = -q;
  return out;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PiScalar& PiScalar::operator*=(const PiScalar& o) {
  check_compatible(o);
  std::size_t d = c_.size();
  std::vector<Rational> full(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) full[i + j] += c_[i] * o.c_[j];
  }
  // Reduce with pi^(p-1) = -p.
  for (std::size_t m = 2 * d - 2; m >= d && m < full.size(); --m) {
    if (full[m] == 0) continue;
    full[m - d] += full[m] * Rational(-p_);
    full[m] = 0;
  }
  c_.assign(full.begin(), full.begin() + d);
  return *this;
}

bool PiScalar::operator==(const PiScalar& o) const {
  return p_ == o.p_ && c_ == o.c_;
}

PiScalar PiScalar::inverse() const {
  if (is_zero()) throw precondition_error("inverse of zero PiScalar");
  if (p_ == 2) return from_rational(2, Rational(1) / c_[0]);
  Poly f(c_.begin(), c_.end());
  poly_trim(f);
  Poly modulus(static_cast<std::size_t>(p_), Rational(0));
  modulus[0] = Rational(p_);
  modulus.back() = Rational(1);
  Poly inv = poly_invmod(f, modulus);
  inv.resize(c_.size(), Rational(0));
  return PiScalar(p_, std::move(inv));
}

PiScalar PiScalar::pow(long e) const {
  PiScalar base = e >= 0 ? *this : inverse();
  long n = e >= 0 ? e : -e;
  PiScalar out = one(p_);
  for (long i = 0; i < n; ++i) out *= base;
  return out;
}

std::optional<Rational> PiScalar::vp() const {
  std::optional<Rational> best;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::optional<Rational> vk = padic_val(c_[k], p_);
    if (!vk) continue;
    Rational v = *vk + rat(static_cast<long>(k), p_ - 1);
    if (!best || v < *best) best = v;
  }
  return best;
}

std::string PiScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string term = padiff::to_string(c_[k]);
    if (k > 0) {
      std::string mono = k == 1 ? "pi" : "pi^" + std::to_string(k);
      if (term == "1") term = mono;
      else if (term == "-1") term = "-" + mono;
      else term += "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

Rational omega_val(long p) { return rat(1, p - 1); }

}  // namespace padiff
