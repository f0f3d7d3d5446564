#pragma once

#include <string>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/rng.hpp"

namespace thompson {

// Rooted binary trees are carried as preorder bitstrings:
// '1' = internal node, '0' = leaf; a size-n tree has length 2n+1.
// Bitstring lexicographic order is the canonical enumeration order everywhere.
using TreeBits = std::string;

bool is_valid_tree(const TreeBits& bits);
void require_valid_tree(const TreeBits& bits);

// Number of internal nodes.
int tree_size(const TreeBits& bits);

// caret(a, b) joins two subtrees below a new root.
TreeBits caret(const TreeBits& left, const TreeBits& right);

// Children of the root; requires size >= 1.
std::pair<TreeBits, TreeBits> split_root(const TreeBits& bits);

BigInt catalan(int n);

// All size-n trees in lexicographic bitstring order.
std::vector<TreeBits> enumerate_trees(int n);

// Lexicographic rank in [0, catalan(n)) and its inverse.
BigInt tree_rank(const TreeBits& bits);
TreeBits tree_unrank(int n, const BigInt& r);

// Exactly uniform over the catalan(n) shapes (Remy growth with plane insertion).
TreeBits random_tree(int n, RandomStream& rs);

// The size+1 leaf arcs in left-to-right order; the root owns [0,1) and each
// internal node halves its arc. They partition [0,1) exactly.
std::vector<CircleInterval> leaf_intervals(const TreeBits& bits);

}  // namespace thompson
