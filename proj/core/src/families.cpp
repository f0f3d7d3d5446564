#include <boost/multiprecision/cpp_int.hpp>

#include "thompson/errors.hpp"
#include "thompson/freeness.hpp"

namespace thompson {

namespace {

using boost::multiprecision::pow;

// u trees: source 110010+s, target 11+t+0100.
TreeBits u_source_tree(const TreeBits& s) { return caret(caret("0", "0"), caret("0", s)); }
TreeBits u_target_tree(const TreeBits& t) { return caret(caret(t, "0"), caret("0", "0")); }
// v trees: source 110+s+100, target 11001+t+0.
TreeBits v_source_tree(const TreeBits& s) { return caret(caret("0", s), caret("0", "0")); }
TreeBits v_target_tree(const TreeBits& t) { return caret(caret("0", "0"), caret(t, "0")); }

void require_subtrees(int n, const TreeBits& s, const TreeBits& t) {
  if (n < 6) throw ConstraintError("ping-pong families need n >= 6");
  require_valid_tree(s);
  require_valid_tree(t);
  if (tree_size(s) != n - 3 || tree_size(t) != n - 3) {
    throw ConstraintError("ping-pong subtrees must have size n-3");
  }
}

bool has_u_shape(const TreeBits& src, const TreeBits& tgt, int n) {
  if (n < 6) return false;
  size_t sub = static_cast<size_t>(2 * (n - 3) + 1);
  size_t full = static_cast<size_t>(2 * n + 1);
  if (src.size() != full || tgt.size() != full) return false;
  if (src.compare(0, 6, "110010") != 0) return false;
  if (!is_valid_tree(src.substr(6))) return false;
  if (tgt.compare(0, 2, "11") != 0) return false;
  if (tgt.compare(2 + sub, 4, "0100") != 0) return false;
  return is_valid_tree(tgt.substr(2, sub));
}

bool has_v_shape(const TreeBits& src, const TreeBits& tgt, int n) {
  if (n < 6) return false;
  size_t sub = static_cast<size_t>(2 * (n - 3) + 1);
  size_t full = static_cast<size_t>(2 * n + 1);
  if (src.size() != full || tgt.size() != full) return false;
  if (src.compare(0, 3, "110") != 0) return false;
  if (src.compare(3 + sub, 3, "100") != 0) return false;
  if (!is_valid_tree(src.substr(3, sub))) return false;
  if (tgt.compare(0, 5, "11001") != 0) return false;
  if (tgt.back() != '0') return false;
  return is_valid_tree(tgt.substr(5, sub));
}

// perm[a]=pa, perm[b]=pb, perm[c]=pc, box labels at positions
// box_base .. box_base+n-3 following block_order.
std::vector<int> box_perm(int n, int a, int pa, int b, int pb, int c, int pc,
                          const std::vector<int>& block_order, int box_base) {
  if (static_cast<int>(block_order.size()) != n - 2) {
    throw ConstraintError("block order must list the n-2 box labels");
  }
  std::vector<int> perm(n + 1, -1);
  perm[a] = pa;
  perm[b] = pb;
  perm[c] = pc;
  for (int t = 0; t < n - 2; ++t) {
    int label = block_order[t];
    if (label < 0 || label > n || perm[label] != -1) {
      throw ConstraintError("block order must cover the box labels without repeats");
    }
    perm[label] = box_base + t;
  }
  return perm;
}

}  // namespace

TElement make_pingpong_u_T(int n, const TreeBits& s_subtree, const TreeBits& t_subtree,
                           int zero_position) {
  require_subtrees(n, s_subtree, t_subtree);
  if (zero_position < 1 || zero_position > n - 5) {
    throw ConstraintError("zero position must lie in [1, n-5]");
  }
  return make_t_element(u_source_tree(s_subtree), u_target_tree(t_subtree), zero_position);
}

TElement make_pingpong_v_T(int n, const TreeBits& s_subtree, const TreeBits& t_subtree,
                           int zero_position) {
  require_subtrees(n, s_subtree, t_subtree);
  if (zero_position < 1 || zero_position > n - 5) {
    throw ConstraintError("zero position must lie in [1, n-5]");
  }
  return make_t_element(v_source_tree(s_subtree), v_target_tree(t_subtree), zero_position + 4);
}

bool is_pingpong_u_T(const TElement& elem) {
  int n = elem.size();
  if (!has_u_shape(elem.source, elem.target, n)) return false;
  return elem.mark >= 1 && elem.mark <= n - 5;
}

bool is_pingpong_v_T(const TElement& elem) {
  int n = elem.size();
  if (!has_v_shape(elem.source, elem.target, n)) return false;
  return elem.mark >= 5 && elem.mark <= n - 1;
}

BigInt pingpong_count_T(int n) {
  if (n < 6) return BigInt(0);
  BigInt c = catalan(n - 3);
  return c * c * (n - 5);
}

BigInt pingpong_pair_count_T(int n) {
  BigInt single = pingpong_count_T(n);
  return single * single;
}

VElement make_pingpong_u_V(int n, const TreeBits& s_subtree, const TreeBits& t_subtree, int i,
                           int j, int k, const std::vector<int>& block_order) {
  require_subtrees(n, s_subtree, t_subtree);
  auto in_range = [n](int x) { return x >= 0 && x <= n; };
  if (!in_range(i) || i == 0 || i == 1) throw ConstraintError("u label i must avoid {0,1}");
  if (!in_range(j) || j == 0 || j == 2 || j == i) {
    throw ConstraintError("u label j must avoid {0,2,i}");
  }
  if (!in_range(k) || k == 0 || k == 1 || k == 2 || k == n || k == i || k == j) {
    throw ConstraintError("u label k must avoid {0,1,2,n,i,j}");
  }
  auto perm = box_perm(n, i, n - 2, j, n - 1, k, n, block_order, 0);
  if (perm[0] < 1 || perm[0] > n - 4) {
    throw ConstraintError("label 0 must sit interior to the box");
  }
  return make_v_element(u_source_tree(s_subtree), u_target_tree(t_subtree), std::move(perm));
}

VElement make_pingpong_v_V(int n, const TreeBits& s_subtree, const TreeBits& t_subtree, int i,
                           int j, int k, const std::vector<int>& block_order) {
  require_subtrees(n, s_subtree, t_subtree);
  auto in_range = [n](int x) { return x >= 0 && x <= n; };
  if (!in_range(i) || i == 0 || i == n - 1) throw ConstraintError("v label i must avoid {0,n-1}");
  if (j < 1 || j > n - 3 || j == i) {
    throw ConstraintError("v label j must lie in [1,n-3] away from i");
  }
  if (!in_range(k) || k == n || k == n - 1 || k == i || k == j) {
    throw ConstraintError("v label k must avoid {n,n-1,i,j}");
  }
  auto perm = box_perm(n, i, 0, j, 1, k, n, block_order, 2);
  if (perm[n - 1] < 3 || perm[n - 1] > n - 2) {
    throw ConstraintError("label n-1 must sit interior to the box");
  }
  return make_v_element(v_source_tree(s_subtree), v_target_tree(t_subtree), std::move(perm));
}

bool is_pingpong_u_V(const VElement& elem) {
  int n = elem.size();
  if (!has_u_shape(elem.source, elem.target, n)) return false;
  if (static_cast<int>(elem.perm.size()) != n + 1) return false;
  int i = -1, j = -1, k = -1;
  for (int l = 0; l <= n; ++l) {
    if (elem.perm[l] == n - 2) i = l;
    if (elem.perm[l] == n - 1) j = l;
    if (elem.perm[l] == n) k = l;
  }
  if (i == 0 || i == 1) return false;
  if (j == 0 || j == 2 || j == i) return false;
  if (k == 0 || k == 1 || k == 2 || k == n || k == i || k == j) return false;
  return elem.perm[0] >= 1 && elem.perm[0] <= n - 4;
}

bool is_pingpong_v_V(const VElement& elem) {
  int n = elem.size();
  if (!has_v_shape(elem.source, elem.target, n)) return false;
  if (static_cast<int>(elem.perm.size()) != n + 1) return false;
  int i = -1, j = -1, k = -1;
  for (int l = 0; l <= n; ++l) {
    if (elem.perm[l] == 0) i = l;
    if (elem.perm[l] == 1) j = l;
    if (elem.perm[l] == n) k = l;
  }
  if (i == 0 || i == n - 1) return false;
  if (j < 1 || j > n - 3 || j == i) return false;
  if (k == n || k == n - 1 || k == i || k == j) return false;
  return elem.perm[n - 1] >= 3 && elem.perm[n - 1] <= n - 2;
}

BigInt pingpong_tuple_count_V(int n) {
  if (n < 6) return BigInt(0);
  return BigInt(n - 3) * (BigInt(n) * n - 5 * n + 7);
}

BigInt pingpong_block_order_count(int n) {
  if (n < 6) return BigInt(0);
  return BigInt(n - 3) * (n - 4) * factorial(n - 4);
}

BigInt pingpong_pair_count_V(int n) {
  if (n < 6) return BigInt(0);
  BigInt c = catalan(n - 3);
  BigInt single = c * c * pingpong_block_order_count(n) * pingpong_tuple_count_V(n);
  return single * single;
}

Rational pingpong_ratio_T(int n) {
  if (n < 6) return Rational(0);
  BigInt cn3 = catalan(n - 3);
  BigInt cn = catalan(n);
  BigInt num = pow(cn3, 4) * pow(BigInt(n - 5), 2);
  BigInt den = pow(cn, 4) * pow(BigInt(n + 1), 2);
  return Rational(num, den);
}

Rational pingpong_ratio_V(int n) {
  if (n < 6) return Rational(0);
  BigInt cn3 = catalan(n - 3);
  BigInt cn = catalan(n);
  BigInt f4 = factorial(n - 4);
  BigInt num = pow(cn3, 4) * f4 * f4 * pow(BigInt(n - 1), 2) * (n - 2) * pow(BigInt(n - 3), 5) *
               pow(BigInt(n - 4), 2);
  BigInt fn1 = factorial(n + 1);
  BigInt den = pow(cn, 4) * fn1 * fn1;
  return Rational(num, den);
}

}  // namespace thompson
