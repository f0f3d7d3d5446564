#include "thompson/dynamics.hpp"

#include <algorithm>

#include "thompson/errors.hpp"

namespace thompson {

std::string fp_kind_name(FpKind k) {
  switch (k) {
    case FpKind::Attracting: return "Attracting";
    case FpKind::Repelling: return "Repelling";
    case FpKind::Mixed: return "Mixed";
    case FpKind::NeutralPoint: return "NeutralPoint";
  }
  return "?";
}

namespace {

BigInt floor_rational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Rational pow2_rational(int e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << (-e));
}

}  // namespace

DynamicsReport fixed_points(const PLMap& m) {
  DynamicsReport report;
  std::vector<CircleInterval> neutral;
  std::vector<std::pair<Rational, size_t>> found;  // (location, branch index)

  const auto& branches = m.branches();
  for (size_t i = 0; i < branches.size(); ++i) {
    const Branch& br = branches[i];
    if (br.e == 0) {
      if (br.b.is_zero()) neutral.push_back(br.dom);
      continue;  // e == 0, b != 0 has no fixed points
    }
    // x = 2^e x + b + k  =>  x = (b + k) / (1 - 2^e); k ranges over the few
    // integers that put x between the domain endpoints.
    Rational denom = Rational(1) - pow2_rational(br.e);
    Rational b = br.b.to_rational();
    Rational k_at_lo = br.dom.lo.to_rational() * denom - b;
    Rational k_at_hi = br.dom.hi().to_rational() * denom - b;
    BigInt k_min = floor_rational(std::min(k_at_lo, k_at_hi)) - 1;
    BigInt k_max = floor_rational(std::max(k_at_lo, k_at_hi)) + 1;
    for (BigInt k = k_min; k <= k_max; ++k) {
      Rational x = (b + Rational(k)) / denom;
      if (x < 0 || x >= 1) continue;
      if (!br.dom.contains(x)) continue;
      if (m.evaluate(x) != x) continue;
      found.emplace_back(x, i);
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [x, idx] : found) {
    const Branch& right = m.branches()[idx];
    // Branch just below x, cyclically; equals the containing branch when x is
    // interior to it.
    size_t left_idx = idx;
    if (x == right.dom.lo.to_rational()) {
      left_idx = idx == 0 ? m.branches().size() - 1 : idx - 1;
    }
    const Branch& left = m.branches()[left_idx];
    // Left-continuity at x holds iff the left law also fixes x.
    Rational left_value = rational_mod1(x * pow2_rational(left.e) + left.b.to_rational());
    bool continuous = left_value == x;

    FixedPoint fp;
    fp.location = x;
    fp.right_exponent = right.e;
    fp.left_exponent = left.e;
    if (!continuous) {
      fp.kind = right.e < 0 ? FpKind::Attracting : FpKind::Repelling;
    } else if (right.e < 0 && left.e < 0) {
      fp.kind = FpKind::Attracting;
    } else if (right.e > 0 && left.e > 0) {
      fp.kind = FpKind::Repelling;
    } else if (right.e == 0 || left.e == 0) {
      fp.kind = FpKind::NeutralPoint;
    } else {
      fp.kind = FpKind::Mixed;
    }
    report.fixed_points.push_back(std::move(fp));
  }

  report.neutral_intervals = IntervalSet::from(std::move(neutral));
  bool ns = report.neutral_intervals.is_empty() && report.fixed_points.size() == 2;
  if (ns) {
    FpKind a = report.fixed_points[0].kind;
    FpKind b = report.fixed_points[1].kind;
    ns = (a == FpKind::Attracting && b == FpKind::Repelling) ||
         (a == FpKind::Repelling && b == FpKind::Attracting);
  }
  report.is_north_south = ns;
  return report;
}

const FixedPoint* attracting_point(const DynamicsReport& r) {
  for (const auto& fp : r.fixed_points) {
    if (fp.kind == FpKind::Attracting) return &fp;
  }
  return nullptr;
}

const FixedPoint* repelling_point(const DynamicsReport& r) {
  for (const auto& fp : r.fixed_points) {
    if (fp.kind == FpKind::Repelling) return &fp;
  }
  return nullptr;
}

TElement make_ns_family_T(int n, const TreeBits& right_subtree_of_S,
                          const TreeBits& left_subtree_of_T, int i) {
  if (n < 3) throw ConstraintError("ns family needs n >= 3");
  if (i < 2 || i > n - 1) throw ConstraintError("ns family label must avoid {0, 1, n}");
  if (tree_size(right_subtree_of_S) != n - 1 || tree_size(left_subtree_of_T) != n - 1) {
    throw ConstraintError("ns family subtrees must have size n-1");
  }
  TreeBits leaf("0");
  TreeBits source = caret(leaf, right_subtree_of_S);
  TreeBits target = caret(left_subtree_of_T, leaf);
  // Label at the last target position n is (n - mark) mod (n+1).
  int mark = (n - i) % (n + 1);
  return make_t_element(source, target, mark);
}

bool is_ns_family_T(const TElement& elem) {
  int n = elem.size();
  if (n < 3) return false;
  auto [src_l, src_r] = split_root(elem.source);
  auto [tgt_l, tgt_r] = split_root(elem.target);
  if (src_l != "0" || tgt_r != "0") return false;
  // Last target label i = n - mark must avoid {0, 1, n}.
  return elem.mark >= 1 && elem.mark <= n - 2;
}

BigInt ns_family_count_T(int n) {
  if (n < 3) return BigInt(0);
  BigInt c = catalan(n - 1);
  return c * c * (n - 2);
}

VElement make_ns_family_V(int n, const TreeBits& right_subtree_of_S,
                          const TreeBits& left_subtree_of_T, std::vector<int> perm) {
  if (n < 3) throw ConstraintError("ns family needs n >= 3");
  if (tree_size(right_subtree_of_S) != n - 1 || tree_size(left_subtree_of_T) != n - 1) {
    throw ConstraintError("ns family subtrees must have size n-1");
  }
  TreeBits leaf("0");
  VElement elem = make_v_element(caret(leaf, right_subtree_of_S),
                                 caret(left_subtree_of_T, leaf), std::move(perm));
  if (!is_ns_family_V(elem)) {
    throw ConstraintError("perm must keep labels 0, 1, n away from target position n");
  }
  return elem;
}

bool is_ns_family_V(const VElement& elem) {
  int n = elem.size();
  if (n < 3) return false;
  auto [src_l, src_r] = split_root(elem.source);
  auto [tgt_l, tgt_r] = split_root(elem.target);
  if (src_l != "0" || tgt_r != "0") return false;
  for (int j : {0, 1, n}) {
    if (elem.perm[j] == n) return false;
  }
  return true;
}

BigInt ns_family_count_V(int n) {
  if (n < 3) return BigInt(0);
  BigInt c = catalan(n - 1);
  return c * c * factorial(n) * (n - 2);
}

Rational density_ratio_formula_T(int n) {
  if (n < 3) throw DomainError("density ratio needs n >= 3");
  Rational closed(BigInt(n - 2) * (n + 1), BigInt(4) * (2 * n - 1) * (2 * n - 1));
  return closed;
}

Rational density_ratio_formula_V(int n) {
  // n! / (n+1)! cancels against (n+1): the V family ratio equals the T ratio.
  return density_ratio_formula_T(n);
}

}  // namespace thompson
