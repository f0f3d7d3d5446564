#include "thompson/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace thompson {

namespace {

BigInt pow2_big(int e) {
  BigInt r(1);
  return r << e;
}

}  // namespace

Dyadic::Dyadic(BigInt num, int exp) : num_(std::move(num)), exp_(exp) {
  if (exp_ < 0) {
    num_ <<= -exp_;
    exp_ = 0;
  }
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  return Dyadic((num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  return Dyadic((num_ << (e - exp_)) - (o.num_ << (e - o.exp_)), e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

int Dyadic::cmp(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  BigInt a = num_ << (e - exp_);
  BigInt b = o.num_ << (e - o.exp_);
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

BigInt Dyadic::floor() const {
  BigInt m = pow2_big(exp_);
  BigInt q = num_ / m;
  BigInt r = num_ % m;
  if (r < 0) --q;
  return q;
}

Dyadic Dyadic::mod1() const {
  return *this - Dyadic(floor());
}

Rational Dyadic::to_rational() const {
  return Rational(num_, pow2_big(exp_));
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -exp_);
}

std::string Dyadic::str() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
  auto slash = text.find("/2^");
  try {
    if (slash == std::string::npos) {
      return Dyadic(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    int exp = std::stoi(text.substr(slash + 3));
    if (exp < 0) throw ParseError("dyadic exponent must be non-negative: " + text);
    return Dyadic(num, exp);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("invalid dyadic literal: " + text);
  }
}

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator: " + text);
    return Rational(p, q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("invalid rational literal: " + text);
  }
}

Rational rational_mod1(const Rational& r) {
  BigInt fl = numerator(r) / denominator(r);
  if (r < 0 && fl * denominator(r) != numerator(r)) --fl;
  return r - Rational(fl);
}

CircleInterval::CircleInterval(Dyadic lo_, Dyadic len_) : lo(std::move(lo_)), len(std::move(len_)) {
  if (lo.sign() < 0 || lo >= Dyadic::one()) throw DomainError("interval lo outside [0,1): " + lo.str());
  if (len.sign() <= 0 || len > Dyadic::one()) throw DomainError("interval len outside (0,1]: " + len.str());
}

bool CircleInterval::wraps() const {
  return hi() > Dyadic::one();
}

bool CircleInterval::contains(const Dyadic& x) const {
  // x in [0,1); shift x - lo into [0,1) and compare against len.
  Dyadic d = (x - lo).mod1();
  return d < len;
}

bool CircleInterval::contains(const Rational& x) const {
  Rational d = rational_mod1(x - lo.to_rational());
  return d < len.to_rational();
}

CircleInterval affine_image(const CircleInterval& iv, int e, const Dyadic& b) {
  Dyadic new_len = iv.len.mul_pow2(e);
  if (new_len > Dyadic::one()) {
    throw CoversCircleError("image covers circle: 2^" + std::to_string(e) + " * " + iv.len.str());
  }
  Dyadic new_lo = (iv.lo.mul_pow2(e) + b).mod1();
  return CircleInterval(new_lo, new_len);
}

IntervalSet IntervalSet::full_circle() {
  IntervalSet s;
  s.arcs_.push_back(CircleInterval::full());
  return s;
}

bool IntervalSet::is_full() const {
  return arcs_.size() == 1 && arcs_[0].is_full();
}

std::vector<std::pair<Dyadic, Dyadic>> IntervalSet::segments() const {
  std::vector<std::pair<Dyadic, Dyadic>> segs;
  for (const auto& a : arcs_) {
    if (a.is_full()) {
      segs.clear();
      segs.emplace_back(Dyadic::zero(), Dyadic::one());
      return segs;
    }
    if (a.wraps()) {
      segs.emplace_back(a.lo, Dyadic::one());
      segs.emplace_back(Dyadic::zero(), a.end_mod1());
    } else {
      segs.emplace_back(a.lo, a.hi());
    }
  }
  std::sort(segs.begin(), segs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return segs;
}

IntervalSet IntervalSet::from_segments(std::vector<std::pair<Dyadic, Dyadic>> segs) {
  std::sort(segs.begin(), segs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  // Merge overlapping or touching segments.
  std::vector<std::pair<Dyadic, Dyadic>> merged;
  for (auto& s : segs) {
    if (s.second <= s.first) continue;
    if (!merged.empty() && s.first <= merged.back().second) {
      if (s.second > merged.back().second) merged.back().second = s.second;
    } else {
      merged.push_back(s);
    }
  }
  IntervalSet out;
  if (merged.empty()) return out;
  if (merged.size() == 1 && merged[0].first.is_zero() && merged[0].second == Dyadic::one()) {
    return full_circle();
  }
  // Rejoin across 0 into a single wrapping arc when both boundary segments exist.
  bool wrap = merged.size() >= 2 && merged.front().first.is_zero() && merged.back().second == Dyadic::one();
  size_t begin = wrap ? 1 : 0;
  size_t end = wrap ? merged.size() - 1 : merged.size();
  for (size_t i = begin; i < end; ++i) {
    out.arcs_.emplace_back(merged[i].first, merged[i].second - merged[i].first);
  }
  if (wrap) {
    Dyadic lo = merged.back().first;
    Dyadic len = (Dyadic::one() - lo) + merged.front().second;
    out.arcs_.emplace_back(lo, len);
  }
  return out;
}

IntervalSet IntervalSet::from(std::vector<CircleInterval> arcs) {
  IntervalSet raw;
  raw.arcs_ = std::move(arcs);
  for (const auto& a : raw.arcs_) {
    if (a.is_full()) return full_circle();
  }
  return from_segments(raw.segments());
}

Dyadic IntervalSet::total_length() const {
  Dyadic sum;
  for (const auto& a : arcs_) sum = sum + a.len;
  return sum;
}

IntervalSet IntervalSet::complement() const {
  if (is_empty()) return full_circle();
  if (is_full()) return IntervalSet();
  auto segs = segments();
  std::vector<std::pair<Dyadic, Dyadic>> gaps;
  Dyadic cursor = Dyadic::zero();
  for (const auto& s : segs) {
    if (cursor < s.first) gaps.emplace_back(cursor, s.first);
    cursor = s.second;
  }
  if (cursor < Dyadic::one()) gaps.emplace_back(cursor, Dyadic::one());
  return from_segments(std::move(gaps));
}

bool IntervalSet::contains(const IntervalSet& other) const {
  auto mine = segments();
  auto theirs = other.segments();
  for (const auto& t : theirs) {
    bool covered = false;
    for (const auto& m : mine) {
      if (m.first <= t.first && t.second <= m.second) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool IntervalSet::contains(const Dyadic& x) const {
  for (const auto& a : arcs_) {
    if (a.contains(x)) return true;
  }
  return false;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const auto& a : arcs_) {
    if (a.contains(x)) return true;
  }
  return false;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  auto mine = segments();
  auto theirs = other.segments();
  std::vector<std::pair<Dyadic, Dyadic>> out;
  for (const auto& m : mine) {
    for (const auto& t : theirs) {
      Dyadic lo = std::max(m.first, t.first);
      Dyadic hi = std::min(m.second, t.second);
      if (lo < hi) out.emplace_back(lo, hi);
    }
  }
  return from_segments(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<CircleInterval> all = arcs_;
  all.insert(all.end(), other.arcs_.begin(), other.arcs_.end());
  return from(std::move(all));
}

CircleInterval IntervalSet::hull() const {
  if (is_empty()) throw DomainError("hull of empty interval set");
  if (is_full()) return CircleInterval::full();
  IntervalSet gaps = complement();
  const CircleInterval* best = nullptr;
  for (const auto& g : gaps.arcs()) {
    if (best == nullptr || g.len > best->len || (g.len == best->len && g.lo < best->lo)) {
      best = &g;
    }
  }
  Dyadic lo = best->end_mod1();
  Dyadic len = Dyadic::one() - best->len;
  return CircleInterval(lo, len);
}

}  // namespace thompson
