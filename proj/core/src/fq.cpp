#include "padiff/fq.hpp"

#include <numeric>

#include "padiff/errors.hpp"

namespace padiff {

namespace {

std::vector<long> code_to_poly(long code, long p, long a) {
  std::vector<long> digits(static_cast<std::size_t>(a), 0);
  for (long i = 0; i < a; ++i) {
    digits[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return digits;
}

long poly_to_code(const std::vector<long>& digits, long p) {
  long code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

// Multiply two F_p polynomials and reduce by the monic modulus.
std::vector<long> polymulmod(const std::vector<long>& f, const std::vector<long>& g,
                             const std::vector<long>& modulus, long p) {
  std::vector<long> full(f.size() + g.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      full[i + j] = (full[i + j] + f[i] * g[j]) % p;
  }
  std::size_t deg = modulus.size() - 1;
  for (std::size_t m = full.size(); m-- > deg;) {
    long c = full[m];
    if (c == 0) continue;
    full[m] = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      long sub = (c * modulus[i]) % p;
      full[m - deg + i] = ((full[m - deg + i] - sub) % p + p) % p;
    }
  }
  full.resize(deg, 0);
  return full;
}

std::vector<long> poly_powmod(std::vector<long> base, long e,
                              const std::vector<long>& modulus, long p) {
  std::vector<long> out(modulus.size() - 1, 0);
  out[0] = 1;
  while (e > 0) {
    if (e & 1) out = polymulmod(out, base, modulus, p);
    base = polymulmod(base, base, modulus, p);
    e >>= 1;
  }
  return out;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin irreducibility test for a monic polynomial over F_p.
bool is_irreducible(const std::vector<long>& modulus, long p) {
  long a = static_cast<long>(modulus.size()) - 1;
  std::vector<long> x(modulus.size() - 1, 0);
  if (modulus.size() - 1 < 2) {
    // degree 1 is always irreducible
    return a == 1;
  }
  x[1] = 1;
  auto frob_iter = [&](long times) {
    std::vector<long> cur = x;
    for (long t = 0; t < times; ++t) cur = poly_powmod(cur, p, modulus, p);
    return cur;
  };
  // x^(p^a) == x mod modulus
  std::vector<long> xa = frob_iter(a);
  if (xa != x) return false;
  for (long ell : prime_divisors(a)) {
    std::vector<long> xe = frob_iter(a / ell);
    if (xe == x) return false;
  }
  return true;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<long, long> prime_power_split(long q) {
  if (q < 2) throw precondition_error("q must be a prime power >= 2");
  long p = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  long a = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++a;
  }
  if (rest != 1) throw precondition_error("q = " + std::to_string(q) + " is not a prime power");
  return {p, a};
}

long multiplicative_order(long p, long n) {
  if (n <= 0) throw precondition_error("order modulo nonpositive n");
  if (n == 1) return 1;
  if (std::gcd(p, n) != 1) throw precondition_error("p and n are not coprime");
  long x = p % n;
  long ord = 1;
  while (x != 1) {
    x = (x * (p % n)) % n;
    ++ord;
  }
  return ord;
}

FqField::FqField(long p, long a) : p_(p), a_(a) {
  if (!is_prime(p)) throw precondition_error("p = " + std::to_string(p) + " is not prime");
  if (a < 1) throw precondition_error("field degree must be positive");
  q_ = 1;
  for (long i = 0; i < a; ++i) {
    q_ *= p;
    if (q_ > 1 << 20) throw precondition_error("field too large");
  }

  // Least monic irreducible of degree a, by coefficient code.
  modulus_.clear();
  for (long code = 0; code < q_; ++code) {
    std::vector<long> candidate = code_to_poly(code, p, a);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      modulus_ = candidate;
      break;
    }
  }
  if (modulus_.empty()) throw internal_error("no irreducible polynomial found");

  mul_table_.assign(static_cast<std::size_t>(q_), std::vector<long>(static_cast<std::size_t>(q_), 0));
  for (long x = 0; x < q_; ++x) {
    std::vector<long> fx = code_to_poly(x, p, a);
    for (long y = x; y < q_; ++y) {
      std::vector<long> fy = code_to_poly(y, p, a);
      long prod = poly_to_code(polymulmod(fx, fy, modulus_, p), p);
      mul_table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = prod;
      mul_table_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = prod;
    }
  }

  generator_ = 0;
  for (long g = 1; g < q_; ++g) {
    if (element_order(g) == q_ - 1) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0 && q_ > 2) throw internal_error("no generator found");
  if (q_ == 2) generator_ = 1;
}

long FqField::add(long x, long y) const {
  std::vector<long> fx = code_to_poly(x, p_, a_);
  std::vector<long> fy = code_to_poly(y, p_, a_);
  for (std::size_t i = 0; i < fx.size(); ++i) fx[i] = (fx[i] + fy[i]) % p_;
  return poly_to_code(fx, p_);
}

long FqField::neg(long x) const {
  std::vector<long> fx = code_to_poly(x, p_, a_);
  for (auto& d : fx) d = (p_ - d) % p_;
  return poly_to_code(fx, p_);
}

long FqField::sub(long x, long y) const { return add(x, neg(y)); }

long FqField::mul(long x, long y) const {
  return mul_table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

long FqField::pow(long x, long e) const {
  if (x == 0) {
    if (e < 0) throw precondition_error("negative power of zero field element");
    return e == 0 ? 1 : 0;
  }
  long period = q_ - 1;
  long r = ((e % period) + period) % period;
  long out = 1;
  long base = x;
  while (r > 0) {
    if (r & 1) out = mul(out, base);
    base = mul(base, base);
    r >>= 1;
  }
  return out;
}

long FqField::inv(long x) const {
  if (x == 0) throw precondition_error("inverse of zero field element");
  return pow(x, q_ - 2);
}

long FqField::scalar_mul(long c, long x) const {
  c = ((c % p_) + p_) % p_;
  return mul(c, x);  // prime-field scalars are the codes 0..p-1
}

long FqField::trace(long x) const {
  long acc = 0;
  long cur = x;
  for (long k = 0; k < a_; ++k) {
    acc = add(acc, cur);
    cur = pow(cur, p_);
  }
  if (acc >= p_) throw internal_error("trace landed outside the prime field");
  return acc;
}

long FqField::element_order(long x) const {
  if (x == 0) throw precondition_error("order of zero");
  long ord = 1;
  long cur = x;
  while (cur != 1) {
    cur = mul(cur, x);
    ++ord;
  }
  return ord;
}

long FqField::element_of_order(long n) const {
  if (n <= 0 || (q_ - 1) % n != 0)
    throw precondition_error("no element of order " + std::to_string(n) + " in F_" + std::to_string(q_));
  return pow(generator_, (q_ - 1) / n);
}

std::string FqField::elem_str(long code) const {
  if (code == 0) return "0";
  std::vector<long> digits = code_to_poly(code, p_, a_);
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = std::to_string(digits[k]);
    } else {
      std::string mono = k == 1 ? "g" : "g^" + std::to_string(k);
      term = digits[k] == 1 ? mono : std::to_string(digits[k]) + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace padiff
