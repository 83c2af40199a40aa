#include "padiff/rational.hpp"

#include <cctype>

#include "padiff/errors.hpp"

namespace padiff {

Rational rat(long num, long den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  // mpq accepts forms like "1/0"; validate shape and denominator ourselves.
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  bool ok;
  if (slash == std::string::npos) {
    ok = check_int(text, true);
  } else {
    ok = check_int(text.substr(0, slash), true) &&
         check_int(text.substr(slash + 1), false);
  }
  if (!ok) throw parse_error("malformed rational literal: " + text);
  Rational q;
  if (q.set_str(text, 10) != 0) throw parse_error("malformed rational literal: " + text);
  if (q.get_den() == 0) throw parse_error("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> padic_val(const Rational& q, long p) {
  if (q == 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  mpz_class pz(p);
  mpz_class tmp;
  unsigned long vn = mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  unsigned long vd = mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  return Rational(static_cast<long>(vn) - static_cast<long>(vd));
}

Rational rat_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw precondition_error("negative power of zero");
  Rational base = e > 0 ? q : Rational(1) / q;
  long n = e > 0 ? e : -e;
  Rational out(1);
  for (long i = 0; i < n; ++i) out *= base;
  return out;
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rat_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational rat_floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(f);
}

std::string decimal_string(const Rational& q, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (q == 0) return "0";
  bool negative = q < 0;
  Rational a = rat_abs(q);

  // Decimal exponent e with 10^e <= a < 10^{e+1}.
  long e = 0;
  Rational ten(10);
  Rational probe = a;
  if (probe >= 1) {
    while (probe >= ten) { probe /= ten; ++e; }
  } else {
    while (probe < 1) { probe *= ten; --e; }
  }

  // Round a * 10^{digits-1-e} half away from zero.
  long shift = significant_digits - 1 - e;
  Rational scaled = a * rat_pow(ten, shift);
  mpz_class twice_num = 2 * scaled.get_num();
  mpz_class digits_z = (twice_num + scaled.get_den()) / (2 * scaled.get_den());
  std::string digits = digits_z.get_str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // Rounding carried over (e.g. 9.99 -> 10.0): drop the extra digit.
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (e >= 0 && e < 15) {
    if (e + 1 >= static_cast<long>(digits.size())) {
      out = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else if (e < 0 && e >= -4) {
    out = "0." + std::string(-e - 1, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  // Trim trailing zeros of a fractional part.
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace padiff
