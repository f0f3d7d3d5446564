#pragma once

#include <vector>

#include "thompson/dyadic.hpp"

namespace thompson {

// One affine piece x -> 2^e x + b mod 1 on a non-wrapping half-open domain.
struct Branch {
  CircleInterval dom;
  int e;
  Dyadic b;

  bool same_law(const Branch& o) const { return e == o.e && b == o.b; }
  bool operator==(const Branch& o) const { return dom == o.dom && same_law(o); }
};

// Canonical piecewise-affine circle bijection with power-of-2 slopes.
// Invariants: branch domains are cut at 0, consecutive, and partition [0,1);
// adjacent branches with identical law are merged; images partition [0,1).
class PLMap {
 public:
  static PLMap identity();
  // Validates the partition and merges; branches may arrive unsorted.
  static PLMap from_branches(std::vector<Branch> branches);

  const std::vector<Branch>& branches() const { return branches_; }
  size_t branch_count() const { return branches_.size(); }

  // Index of the branch whose half-open domain contains x in [0,1).
  size_t branch_index(const Dyadic& x) const;
  size_t branch_index(const Rational& x) const;

  Rational evaluate(const Rational& x) const;
  Dyadic evaluate(const Dyadic& x) const;

  bool is_identity() const;
  bool operator==(const PLMap& o) const { return branches_ == o.branches_; }
  bool operator!=(const PLMap& o) const { return !(*this == o); }

  // Image arc of one branch, possibly wrapping.
  CircleInterval branch_image(size_t i) const;

 private:
  std::vector<Branch> branches_;
};

// f(g(x)): apply g first. Exact; result canonical.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);

// Exact image of a set under the map.
IntervalSet map_set(const PLMap& f, const IntervalSet& s);

}  // namespace thompson
