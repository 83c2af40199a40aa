#include "padiff/laurent.hpp"

#include <algorithm>

#include "padiff/errors.hpp"

namespace padiff {

namespace {

// Fold every stored term with exponent >= from into the tail bound.
void fold_into_tail(std::map<long, PiScalar>& terms, TailBound& tail) {
  for (auto it = terms.lower_bound(tail.from); it != terms.end();) {
    std::optional<Rational> v = it->second.vp();
    if (v && *v < tail.vp_min) tail.vp_min = *v;
    it = terms.erase(it);
  }
}

}  // namespace

LaurentElement::LaurentElement(long p) : p_(p) {
  if (p < 2) throw precondition_error("prime must be >= 2");
}

LaurentElement::LaurentElement(long p, std::map<long, PiScalar> terms,
                               std::optional<TailBound> tail)
    : p_(p), terms_(std::move(terms)), tail_(std::move(tail)) {
  if (p < 2) throw precondition_error("prime must be >= 2");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.prime() != p_) throw precondition_error("mixed primes in Laurent terms");
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  if (tail_) {
    if (terms_.empty())
      throw precondition_error("a tail bound requires at least one stored term");
    if (tail_->from <= terms_.rbegin()->first)
      throw precondition_error("tail must start above every stored exponent");
  }
}

LaurentElement LaurentElement::zero(long p) { return LaurentElement(p); }

LaurentElement LaurentElement::one(long p) {
  return monomial(p, 0, PiScalar::one(p));
}

LaurentElement LaurentElement::x(long p) {
  return monomial(p, 1, PiScalar::one(p));
}

LaurentElement LaurentElement::monomial(long p, long exp, PiScalar coeff) {
  std::map<long, PiScalar> t;
  if (!coeff.is_zero()) t.emplace(exp, std::move(coeff));
  return LaurentElement(p, std::move(t));
}

LaurentElement LaurentElement::constant(long p, const Rational& value) {
  return monomial(p, 0, PiScalar::from_rational(p, value));
}

bool LaurentElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == PiScalar::one(p_) && !tail_;
}

long LaurentElement::ord_x() const {
  if (terms_.empty()) throw precondition_error("ord of zero");
  return terms_.begin()->first;
}

const PiScalar& LaurentElement::leading_coeff() const {
  if (terms_.empty()) throw precondition_error("leading coefficient of zero");
  return terms_.begin()->second;
}

PiScalar LaurentElement::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? PiScalar::zero(p_) : it->second;
}

LaurentElement LaurentElement::derive() const {
  std::map<long, PiScalar> out;
  for (const auto& [exp, c] : terms_) {
    if (exp == 0) continue;
    PiScalar dc = c * PiScalar::from_long(p_, exp);
    if (!dc.is_zero()) out.emplace(exp - 1, std::move(dc));
  }
  std::optional<TailBound> tail = tail_;
  if (tail) {
    tail->from -= 1;
    if (out.empty())
      throw precondition_error("derivative keeps no stored term; tail-only values are not representable");
  }
  return LaurentElement(p_, std::move(out), std::move(tail));
}

LaurentElement LaurentElement::shifted(long k) const {
  std::map<long, PiScalar> out;
  for (const auto& [exp, c] : terms_) out.emplace(exp + k, c);
  std::optional<TailBound> tail = tail_;
  if (tail) tail->from += k;
  return LaurentElement(p_, std::move(out), std::move(tail));
}

LaurentElement LaurentElement::operator-() const {
  std::map<long, PiScalar> out;
  for (const auto& [exp, c] : terms_) out.emplace(exp, -c);
  return LaurentElement(p_, std::move(out), tail_);
}

LaurentElement operator+(const LaurentElement& a, const LaurentElement& b) {
  if (a.p_ != b.p_) throw precondition_error("mixed primes in Laurent arithmetic");
  std::map<long, PiScalar> out = a.terms_;
  for (const auto& [exp, c] : b.terms_) {
    auto [it, fresh] = out.emplace(exp, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  std::optional<TailBound> tail;
  if (a.tail_ && b.tail_) {
    tail = TailBound{std::min(a.tail_->from, b.tail_->from),
                     rat_min(a.tail_->vp_min, b.tail_->vp_min)};
  } else if (a.tail_) {
    tail = a.tail_;
  } else if (b.tail_) {
    tail = b.tail_;
  }
  if (tail) {
    fold_into_tail(out, *tail);
    if (out.empty()) return LaurentElement(a.p_);
  }
  return LaurentElement(a.p_, std::move(out), std::move(tail));
}

LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) {
  return a + (-b);
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  return *this = *this + o;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  return *this = *this - o;
}

bool LaurentElement::operator==(const LaurentElement& o) const {
  return p_ == o.p_ && terms_ == o.terms_ && tail_ == o.tail_;
}

LaurentElement LaurentElement::scaled(const PiScalar& c) const {
  if (c.is_zero()) return LaurentElement(p_);
  std::map<long, PiScalar> out;
  for (const auto& [exp, coef] : terms_) {
    PiScalar prod = coef * c;
    if (!prod.is_zero()) out.emplace(exp, std::move(prod));
  }
  std::optional<TailBound> tail = tail_;
  if (tail) {
    std::optional<Rational> vc = c.vp();
    tail->vp_min += *vc;
  }
  return LaurentElement(p_, std::move(out), std::move(tail));
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exp, c] : terms_) {
    std::string cs = c.to_string();
    bool wrap = cs.find_first_of("+-") != std::string::npos && cs[0] != '-';
    if (cs.find_first_of("+-", 1) != std::string::npos) wrap = true;
    std::string term;
    if (exp == 0) {
      term = cs;
    } else {
      std::string mono = exp == 1 ? "x" : "x^" + std::to_string(exp);
      if (cs == "1") term = mono;
      else if (cs == "-1") term = "-" + mono;
      else term = (wrap ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += " + ";
    else if (!out.empty()) {
      out += " - ";
      term = term.substr(1);
    }
    out += term;
  }
  if (tail_) out += " + O(x^" + std::to_string(tail_->from) + "; vp>=" + padiff::to_string(tail_->vp_min) + ")";
  return out;
}

LaurentElement lmul(const LaurentElement& a, const LaurentElement& b) {
  if (a.prime() != b.prime()) throw precondition_error("mixed primes in Laurent arithmetic");
  long p = a.prime();
  if (a.is_zero() || b.is_zero()) return LaurentElement(p);

  std::map<long, PiScalar> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      PiScalar prod = ca * cb;
      if (prod.is_zero()) continue;
      auto [it, fresh] = out.emplace(ea + eb, prod);
      if (!fresh) {
        it->second += prod;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }

  auto min_vp = [](const LaurentElement& f) {
    std::optional<Rational> best;
    for (const auto& [exp, c] : f.terms()) {
      std::optional<Rational> v = c.vp();
      if (v && (!best || *v < *best)) best = *v;
    }
    return best ? *best : Rational(0);
  };

  std::optional<TailBound> tail;
  auto merge_bound = [&tail](long from, const Rational& vp_min) {
    if (!tail) tail = TailBound{from, vp_min};
    else {
      tail->from = std::min(tail->from, from);
      tail->vp_min = rat_min(tail->vp_min, vp_min);
    }
  };
  if (b.tail()) merge_bound(a.ord_x() + b.tail()->from, min_vp(a) + b.tail()->vp_min);
  if (a.tail()) merge_bound(a.tail()->from + b.ord_x(), a.tail()->vp_min + min_vp(b));
  if (a.tail() && b.tail())
    merge_bound(a.tail()->from + b.tail()->from, a.tail()->vp_min + b.tail()->vp_min);

  if (tail) {
    fold_into_tail(out, *tail);
    if (out.empty()) return LaurentElement(p);
  }
  return LaurentElement(p, std::move(out), std::move(tail));
}

GaussEnvelope gauss_envelope(const LaurentElement& f) {
  if (f.is_zero()) throw precondition_error("Gauss envelope of zero");

  // One affine function vp(b_i) + i*s per stored term; slopes are the
  // distinct exponents, so ties occur only between intercepts.
  std::vector<AffinePiece> lines;
  for (const auto& [exp, c] : f.terms()) {
    std::optional<Rational> v = c.vp();
    lines.push_back({*v, Rational(exp)});
  }

  // Walk the lower envelope left to right starting from the winner at s -> 0+.
  std::size_t current = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].intercept < lines[current].intercept ||
        (lines[i].intercept == lines[current].intercept &&
         lines[i].slope < lines[current].slope))
      current = i;
  }

  std::vector<Rational> breaks;
  std::vector<AffinePiece> pieces;
  Rational at = 0;
  std::vector<bool> used(lines.size(), false);
  while (true) {
    pieces.push_back(lines[current]);
    used[current] = true;
    std::optional<Rational> best_s;
    std::size_t best = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (used[i] || lines[i].slope >= lines[current].slope) continue;
      Rational cross = (lines[i].intercept - lines[current].intercept) /
                       (lines[current].slope - lines[i].slope);
      if (cross <= at) continue;
      if (!best_s || cross < *best_s ||
          (cross == *best_s && lines[i].slope < lines[best].slope)) {
        best_s = cross;
        best = i;
      }
    }
    if (!best_s) break;
    breaks.push_back(*best_s);
    at = *best_s;
    current = best;
  }

  PiecewiseAffine envelope(Rational(0), std::nullopt, std::move(breaks), std::move(pieces));

  Rational certified_from = 0;
  if (f.tail()) {
    // The tail line vp_min + from*s has strictly larger slope than every
    // envelope piece, so {tail line >= envelope} is a right ray.
    AffinePiece tail_line{f.tail()->vp_min, Rational(f.tail()->from)};
    const auto& pcs = envelope.pieces();
    const auto& brk = envelope.breakpoints();
    certified_from = Rational(-1);
    for (std::size_t i = 0; i < pcs.size(); ++i) {
      Rational left = i == 0 ? Rational(0) : brk[i - 1];
      std::optional<Rational> right;
      if (i < brk.size()) right = brk[i];
      if (tail_line.at(left) >= pcs[i].at(left)) {
        certified_from = left;
        break;
      }
      Rational cross = (pcs[i].intercept - tail_line.intercept) /
                       (tail_line.slope - pcs[i].slope);
      if (!right || cross <= *right) {
        certified_from = rat_max(cross, Rational(0));
        break;
      }
    }
    if (certified_from < 0) throw internal_error("tail certification ray not found");
  }
  return GaussEnvelope{std::move(envelope), std::move(certified_from)};
}

Rational dominance_threshold(const LaurentElement& f) {
  GaussEnvelope env = gauss_envelope(f);
  Rational s_star = env.envelope.breakpoints().empty()
                        ? Rational(0)
                        : env.envelope.breakpoints().back();
  if (env.certified_from > s_star)
    throw precondition_error(
        "tail bound does not certify the dominance region: certified from s = " +
        to_string(env.certified_from) + " but leading term dominates from s = " +
        to_string(s_star) + "; strengthen the tail bound (larger vp_min or larger from)");
  return s_star;
}

std::optional<LaurentElement> try_divide(const LaurentElement& f, const LaurentElement& g) {
  if (!f.is_tail_free() || !g.is_tail_free())
    throw precondition_error("exact division requires tail-free operands");
  if (g.is_zero()) throw precondition_error("division by zero");
  long p = f.prime();
  if (f.is_zero()) return LaurentElement(p);

  long shift = f.ord_x() - g.ord_x();
  // Work with plain polynomial coefficient vectors (constant term first).
  auto to_vec = [](const LaurentElement& e) {
    long lo = e.ord_x();
    long hi = e.terms().rbegin()->first;
    std::vector<PiScalar> v(static_cast<std::size_t>(hi - lo + 1), PiScalar::zero(e.prime()));
    for (const auto& [exp, c] : e.terms()) v[static_cast<std::size_t>(exp - lo)] = c;
    return v;
  };
  std::vector<PiScalar> num = to_vec(f);
  std::vector<PiScalar> den = to_vec(g);
  if (num.size() < den.size()) return std::nullopt;

  PiScalar lead_inv = den.back().inverse();
  std::vector<PiScalar> quot(num.size() - den.size() + 1, PiScalar::zero(p));
  for (std::size_t k = quot.size(); k-- > 0;) {
    PiScalar c = num[k + den.size() - 1] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  for (const auto& r : num)
    if (!r.is_zero()) return std::nullopt;

  std::map<long, PiScalar> out;
  for (std::size_t k = 0; k < quot.size(); ++k)
    if (!quot[k].is_zero()) out.emplace(static_cast<long>(k) + shift, quot[k]);
  return LaurentElement(p, std::move(out));
}

}  // namespace padiff
