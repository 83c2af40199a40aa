#include "padiff/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "padiff/errors.hpp"

namespace padiff {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Exact division of integer polynomials (divisor monic up to sign of lead).
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  while (true) {
    ztrim(num);
    if (num.empty()) break;
    if (num.size() < den.size()) throw internal_error("inexact cyclotomic division");
    mpz_class c = num.back() / den.back();
    if (c * den.back() != num.back()) throw internal_error("inexact cyclotomic division");
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
  }
  return q;
}

// Reduce a rational polynomial modulo the monic integer polynomial m in place,
// returning the canonical remainder of degree < deg m.
std::vector<Rational> reduce_mod(std::vector<Rational> f, const ZPoly& m) {
  std::size_t deg = m.size() - 1;
  while (f.size() > deg) {
    Rational c = f.back();
    f.pop_back();
    if (c == 0) continue;
    std::size_t shift = f.size() + 1 - m.size();
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      f[shift + i] -= c * Rational(m[i]);
  }
  f.resize(deg, Rational(0));
  return f;
}

}  // namespace

long euler_phi(long n) {
  if (n <= 0) throw precondition_error("euler_phi of nonpositive n");
  long result = n;
  long m = n;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  static std::map<long, ZPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    ZPoly num(static_cast<std::size_t>(d) + 1, mpz_class(0));
    num[0] = -1;
    num.back() = 1;
    for (long e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      num = zdiv_exact(std::move(num), cache.at(e));
    }
    ztrim(num);
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic(long conductor)
    : conductor_(conductor),
      c_(static_cast<std::size_t>(euler_phi(conductor)), Rational(0)) {
  if (conductor < 1) throw precondition_error("conductor must be positive");
}

Cyclotomic Cyclotomic::zero(long conductor) { return Cyclotomic(conductor); }

Cyclotomic Cyclotomic::one(long conductor) {
  return from_rational(conductor, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(long conductor, const Rational& value) {
  Cyclotomic out(conductor);
  if (conductor == 1) {
    out.c_[0] = value;
    return out;
  }
  out.c_[0] = value;
  return out;
}

Cyclotomic Cyclotomic::zeta(long conductor) { return zeta_pow(conductor, 1); }

Cyclotomic Cyclotomic::zeta_pow(long conductor, long e) {
  Cyclotomic out(conductor);
  long n = conductor;
  long r = ((e % n) + n) % n;
  std::vector<Rational> mono(static_cast<std::size_t>(r) + 1, Rational(0));
  mono.back() = Rational(1);
  out.c_ = reduce_mod(std::move(mono), cyclotomic_polynomial(n));
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw precondition_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lift(long new_conductor) const {
  if (new_conductor == conductor_) return *this;
  if (new_conductor % conductor_ != 0)
    throw precondition_error("lift target conductor must be a multiple");
  long step = new_conductor / conductor_;
  std::vector<Rational> full(static_cast<std::size_t>(new_conductor), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    full[k * static_cast<std::size_t>(step)] = c_[k];
  Cyclotomic out(new_conductor);
  out.c_ = reduce_mod(std::move(full), cyclotomic_polynomial(new_conductor));
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  long n = conductor_;
  std::vector<Rational> full(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    long e = (n - static_cast<long>(k)) % n;
    full[static_cast<std::size_t>(e)] += c_[k];
  }
  Cyclotomic out(n);
  out.c_ = reduce_mod(std::move(full), cyclotomic_polynomial(n));
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  long n = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic x = a.lift(n);
  Cyclotomic y = b.lift(n);
  for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  long n = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic x = a.lift(n);
  Cyclotomic y = b.lift(n);
  std::vector<Rational> full(x.c_.size() + y.c_.size(), Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) full[i + j] += x.c_[i] * y.c_[j];
  }
  Cyclotomic out(n);
  out.c_ = reduce_mod(std::move(full), cyclotomic_polynomial(n));
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) { return *this = *this + o; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this = *this - o; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return c_ == o.c_;
  long n = std::lcm(conductor_, o.conductor_);
  return lift(n).c_ == o.lift(n).c_;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  std::string base = "z" + std::to_string(conductor_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string term = padiff::to_string(c_[k]);
    if (k > 0) {
      std::string mono = k == 1 ? base : base + "^" + std::to_string(k);
      if (term == "1") term = mono;
      else if (term == "-1") term = "-" + mono;
      else term += "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += " + ";
    else if (!out.empty()) {
      out += " - ";
      term = term.substr(1);
    }
    out += term;
  }
  return out;
}

Cyclotomic psi_value(const FqField& field, long alpha) {
  long t = field.trace(alpha);
  return Cyclotomic::zeta_pow(field.p(), t);
}

}  // namespace padiff
