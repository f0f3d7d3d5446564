#pragma once

#include <string>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/tree.hpp"

namespace thompson {

enum class Group { T, V };

std::string group_name(Group g);
Group parse_group(const std::string& name);

// Cyclically marked tree pair: source leaf j goes to target position
// (mark + j) mod (n+1); mark is the target position receiving source leaf 0.
struct TElement {
  TreeBits source;
  TreeBits target;
  int mark = 0;

  int size() const { return tree_size(source); }
  int leaves() const { return size() + 1; }
  bool operator==(const TElement& o) const {
    return source == o.source && target == o.target && mark == o.mark;
  }
};

// Fully marked tree pair: perm[j] is the target position of source leaf j.
struct VElement {
  TreeBits source;
  TreeBits target;
  std::vector<int> perm;

  int size() const { return tree_size(source); }
  int leaves() const { return size() + 1; }
  bool operator==(const VElement& o) const {
    return source == o.source && target == o.target && perm == o.perm;
  }
};

TElement make_t_element(const TreeBits& source, const TreeBits& target, int mark);
VElement make_v_element(const TreeBits& source, const TreeBits& target, std::vector<int> perm);

// The mark-shift permutation; to_pl_map of both representations agrees.
VElement as_v_element(const TElement& t);

PLMap to_pl_map(const TElement& elem);
PLMap to_pl_map(const VElement& elem);

// Unreduced diagram counts: C_n^2 (n+1) for T and C_n^2 (n+1)! for V.
BigInt diagram_count(Group group, int n);
BigInt factorial(int n);

// Lexicographic permutation of {0..n} with the given rank (factorial number system).
std::vector<int> perm_unrank(int n_plus_1, unsigned long long rank);

}  // namespace thompson
