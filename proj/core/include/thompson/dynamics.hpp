#pragma once

#include <string>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

enum class FpKind { Attracting, Repelling, Mixed, NeutralPoint };

std::string fp_kind_name(FpKind k);

// Isolated fixed point with its one-sided slope exponents.
struct FixedPoint {
  Rational location;   // in [0,1), evaluate(map, location) == location
  int right_exponent;  // exponent of the branch containing the point
  int left_exponent;   // exponent of the branch just below it (cyclically)
  FpKind kind;
};

struct DynamicsReport {
  std::vector<FixedPoint> fixed_points;
  IntervalSet neutral_intervals;  // pointwise-fixed arcs
  bool is_north_south = false;    // no neutral arcs, exactly two fixed points,
                                  // kinds {Attracting, Repelling}
};

// Exact fixed-point analysis: per branch solve x = 2^e x + b + k over the
// integers k that can land x in [0,1); classify by one-sided exponents.
// A fixed point where the map is one-sidedly discontinuous (V) is classified
// by its containing branch alone.
DynamicsReport fixed_points(const PLMap& m);

const FixedPoint* attracting_point(const DynamicsReport& r);
const FixedPoint* repelling_point(const DynamicsReport& r);

// North-south families behind the density measurements.
// T family: S = caret(leaf, right_subtree), T = caret(left_subtree, leaf),
// the last target leaf carries label i with 2 <= i <= n-1.
TElement make_ns_family_T(int n, const TreeBits& right_subtree_of_S,
                          const TreeBits& left_subtree_of_T, int i);
bool is_ns_family_T(const TElement& elem);
BigInt ns_family_count_T(int n);  // C_{n-1}^2 (n-2)

// V family: same tree shapes, perm keeps labels 0, 1, n away from the last
// target position.
VElement make_ns_family_V(int n, const TreeBits& right_subtree_of_S,
                          const TreeBits& left_subtree_of_T, std::vector<int> perm);
bool is_ns_family_V(const VElement& elem);
BigInt ns_family_count_V(int n);  // C_{n-1}^2 n! (n-2)

// Exact family density (n-2) C_{n-1}^2 / ((n+1) C_n^2), identical for T and V,
// with closed form (n-2)(n+1) / (4 (2n-1)^2).
Rational density_ratio_formula_T(int n);
Rational density_ratio_formula_V(int n);

}  // namespace thompson
