#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "thompson/errors.hpp"

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact dyadic rational num / 2^exp.
// Invariant: exp >= 0, and exp == 0 or num is odd (normalized).
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  explicit Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
  // Value num / 2^exp; exp may be negative (meaning num * 2^|exp|).
  Dyadic(BigInt num, int exp);

  const BigInt& num() const { return num_; }
  int exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  // Value * 2^e, exact for either sign of e.
  Dyadic mul_pow2(int e) const { return Dyadic(num_, exp_ - e); }

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
  bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
  bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
  bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }

  // Representative in [0,1) congruent mod 1.
  Dyadic mod1() const;
  BigInt floor() const;

  Rational to_rational() const;
  double to_double() const;

  // Text form "num/2^exp", e.g. "3/2^3"; "0/2^0" is zero.
  std::string str() const;
  static Dyadic parse(const std::string& text);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(BigInt(1)); }
  // 1 / 2^d.
  static Dyadic pow2(int d) { return Dyadic(BigInt(1), d); }

 private:
  int cmp(const Dyadic& o) const;
  void normalize();

  BigInt num_;
  int exp_;
};

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);
Rational rational_mod1(const Rational& r);

// Half-open arc [lo, lo+len) mod 1 on the circle [0,1).
// Invariants: 0 <= lo < 1, 0 < len <= 1; len == 1 is the full circle.
// lo + len may exceed 1 (wrapping arc).
struct CircleInterval {
  Dyadic lo;
  Dyadic len;

  CircleInterval(Dyadic lo_, Dyadic len_);

  bool wraps() const;
  bool is_full() const { return len == Dyadic::one(); }
  // lo + len, not reduced mod 1.
  Dyadic hi() const { return lo + len; }
  // Right endpoint reduced into [0,1).
  Dyadic end_mod1() const { return hi().mod1(); }

  bool contains(const Dyadic& x) const;
  bool contains(const Rational& x) const;

  bool operator==(const CircleInterval& o) const { return lo == o.lo && len == o.len; }
  bool operator!=(const CircleInterval& o) const { return !(*this == o); }

  static CircleInterval full() { return CircleInterval(Dyadic::zero(), Dyadic::one()); }
};

// Image {2^e x + b : x in iv} as an arc; throws CoversCircleError if 2^e len > 1.
CircleInterval affine_image(const CircleInterval& iv, int e, const Dyadic& b);

// Canonical finite union of arcs: pairwise disjoint, non-adjacent, sorted by lo,
// at most one wrapping arc (last in order), full circle stored as [0, len 1).
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet from(std::vector<CircleInterval> arcs);
  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet full_circle();

  const std::vector<CircleInterval>& arcs() const { return arcs_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;
  Dyadic total_length() const;

  IntervalSet complement() const;
  bool contains(const IntervalSet& other) const;
  bool contains(const Dyadic& x) const;
  bool contains(const Rational& x) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  bool disjoint_from(const IntervalSet& other) const { return intersect(other).is_empty(); }

  // Smallest arc containing the set: complement of the largest gap.
  // Ties broken by smallest gap lo; requires a nonempty set.
  CircleInterval hull() const;

  bool operator==(const IntervalSet& o) const { return arcs_ == o.arcs_; }
  bool operator!=(const IntervalSet& o) const { return !(*this == o); }

 private:
  // Non-wrapping [start, end) segments with 0 <= start < end <= 1, sorted, merged.
  std::vector<std::pair<Dyadic, Dyadic>> segments() const;
  static IntervalSet from_segments(std::vector<std::pair<Dyadic, Dyadic>> segs);

  std::vector<CircleInterval> arcs_;
};

}  // namespace thompson
