#include "padiff/piecewise.hpp"

#include <algorithm>

#include "padiff/errors.hpp"

namespace padiff {

PiecewiseAffine::PiecewiseAffine(Rational lo, std::optional<Rational> hi,
                                 std::vector<Rational> breakpoints,
                                 std::vector<AffinePiece> pieces)
    : lo_(std::move(lo)), hi_(std::move(hi)), breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw precondition_error("piecewise function needs at least one piece");
  if (breaks_.size() + 1 != pieces_.size())
    throw precondition_error("piecewise function needs one more piece than breakpoints");
  if (hi_ && !(*hi_ > lo_)) throw precondition_error("empty piecewise domain");
  Rational prev = lo_;
  for (const auto& b : breaks_) {
    if (!(b > prev)) throw precondition_error("breakpoints must be strictly increasing inside the domain");
    prev = b;
  }
  if (hi_ && !breaks_.empty() && !(breaks_.back() < *hi_))
    throw precondition_error("breakpoints must be strictly increasing inside the domain");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (pieces_[i].at(breaks_[i]) != pieces_[i + 1].at(breaks_[i]))
      throw precondition_error("piecewise function discontinuous at breakpoint " + to_string(breaks_[i]));
  }
  // Normalize: merge identical adjacent pieces.
  for (std::size_t i = breaks_.size(); i-- > 0;) {
    if (pieces_[i] == pieces_[i + 1]) {
      pieces_.erase(pieces_.begin() + static_cast<long>(i) + 1);
      breaks_.erase(breaks_.begin() + static_cast<long>(i));
    }
  }
}

PiecewiseAffine PiecewiseAffine::single(Rational lo, std::optional<Rational> hi, AffinePiece piece) {
  return PiecewiseAffine(std::move(lo), std::move(hi), {}, {std::move(piece)});
}

bool PiecewiseAffine::contains(const Rational& s) const {
  if (!(s > lo_)) return false;
  if (hi_ && !(s < *hi_)) return false;
  return true;
}

const AffinePiece& PiecewiseAffine::piece_at(const Rational& s) const {
  if (!contains(s)) throw precondition_error("evaluation outside piecewise domain at s = " + to_string(s));
  std::size_t idx = 0;
  while (idx < breaks_.size() && s > breaks_[idx]) ++idx;
  return pieces_[idx];
}

Rational PiecewiseAffine::at(const Rational& s) const { return piece_at(s).at(s); }

Rational PiecewiseAffine::last_breakpoint() const {
  return breaks_.empty() ? lo_ : breaks_.back();
}

bool PiecewiseAffine::slopes_weakly_increasing() const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (pieces_[i].slope > pieces_[i + 1].slope) return false;
  return true;
}

bool PiecewiseAffine::slopes_weakly_decreasing() const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (pieces_[i].slope < pieces_[i + 1].slope) return false;
  return true;
}

bool PiecewiseAffine::operator==(const PiecewiseAffine& o) const {
  return lo_ == o.lo_ && hi_ == o.hi_ && breaks_ == o.breaks_ && pieces_ == o.pieces_;
}

PiecewiseAffine pw_add(const PiecewiseAffine& a, const PiecewiseAffine& b) {
  Rational lo = rat_max(a.lo_, b.lo_);
  std::optional<Rational> hi;
  if (a.hi_ && b.hi_) hi = rat_min(*a.hi_, *b.hi_);
  else if (a.hi_) hi = a.hi_;
  else if (b.hi_) hi = b.hi_;
  if (hi && !(*hi > lo)) throw precondition_error("piecewise sum over empty domain");

  std::vector<Rational> cuts;
  for (const auto& c : a.breaks_)
    if (c > lo && (!hi || c < *hi)) cuts.push_back(c);
  for (const auto& c : b.breaks_)
    if (c > lo && (!hi || c < *hi)) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    Rational left = i == 0 ? lo : cuts[i - 1];
    Rational right;
    if (i < cuts.size()) right = cuts[i];
    else if (hi) right = *hi;
    else right = left + 1;
    Rational witness = (left + right) / 2;
    const AffinePiece& pa = a.piece_at(witness);
    const AffinePiece& pb = b.piece_at(witness);
    pieces.push_back({pa.intercept + pb.intercept, pa.slope + pb.slope});
  }
  return PiecewiseAffine(lo, hi, std::move(cuts), std::move(pieces));
}

}  // namespace padiff
