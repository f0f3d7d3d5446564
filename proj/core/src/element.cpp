#include "thompson/element.hpp"

#include <algorithm>

#include "thompson/errors.hpp"

namespace thompson {

std::string group_name(Group g) {
  return g == Group::T ? "T" : "V";
}

Group parse_group(const std::string& name) {
  if (name == "T" || name == "t") return Group::T;
  if (name == "V" || name == "v") return Group::V;
  throw ParseError("unknown group: " + name + " (expected T or V)");
}

TElement make_t_element(const TreeBits& source, const TreeBits& target, int mark) {
  require_valid_tree(source);
  require_valid_tree(target);
  int n = tree_size(source);
  if (tree_size(target) != n) throw ConstraintError("tree sizes differ");
  if (mark < 0 || mark > n) throw ConstraintError("mark out of range [0, n]");
  return TElement{source, target, mark};
}

VElement make_v_element(const TreeBits& source, const TreeBits& target, std::vector<int> perm) {
  require_valid_tree(source);
  require_valid_tree(target);
  int n = tree_size(source);
  if (tree_size(target) != n) throw ConstraintError("tree sizes differ");
  if (static_cast<int>(perm.size()) != n + 1) throw ConstraintError("perm length must be n+1");
  std::vector<char> seen(n + 1, 0);
  for (int p : perm) {
    if (p < 0 || p > n || seen[p]) throw ConstraintError("perm is not a bijection of {0..n}");
    seen[p] = 1;
  }
  return VElement{source, target, std::move(perm)};
}

VElement as_v_element(const TElement& t) {
  int n = t.size();
  std::vector<int> perm(n + 1);
  for (int j = 0; j <= n; ++j) perm[j] = (t.mark + j) % (n + 1);
  return VElement{t.source, t.target, std::move(perm)};
}

namespace {

// Leaf arcs are 2^-depth long, so the slope exponent is depth(src) - depth(tgt).
int arc_depth(const CircleInterval& arc) {
  return arc.len.exp();
}

PLMap leaf_map(const TreeBits& source, const TreeBits& target, const std::vector<int>& perm) {
  auto src = leaf_intervals(source);
  auto tgt = leaf_intervals(target);
  std::vector<Branch> branches;
  branches.reserve(src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    const CircleInterval& dom = src[j];
    const CircleInterval& img = tgt[perm[j]];
    int e = arc_depth(dom) - arc_depth(img);
    Dyadic b = (img.lo - dom.lo.mul_pow2(e)).mod1();
    branches.push_back(Branch{dom, e, b});
  }
  return PLMap::from_branches(std::move(branches));
}

}  // namespace

PLMap to_pl_map(const TElement& elem) {
  return leaf_map(elem.source, elem.target, as_v_element(elem).perm);
}

PLMap to_pl_map(const VElement& elem) {
  return leaf_map(elem.source, elem.target, elem.perm);
}

BigInt factorial(int n) {
  BigInt f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt diagram_count(Group group, int n) {
  if (n < 0) throw DomainError("diagram_count of negative size");
  BigInt c = catalan(n);
  if (group == Group::T) return c * c * (n + 1);
  return c * c * factorial(n + 1);
}

std::vector<int> perm_unrank(int n_plus_1, unsigned long long rank) {
  std::vector<int> avail(n_plus_1);
  for (int i = 0; i < n_plus_1; ++i) avail[i] = i;
  std::vector<unsigned long long> fact(n_plus_1, 1);
  for (int i = 1; i < n_plus_1; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> out;
  out.reserve(n_plus_1);
  for (int i = n_plus_1 - 1; i >= 0; --i) {
    unsigned long long digit = rank / fact[i];
    rank %= fact[i];
    out.push_back(avail[digit]);
    avail.erase(avail.begin() + static_cast<long>(digit));
  }
  return out;
}

}  // namespace thompson
