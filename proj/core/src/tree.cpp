#include "thompson/tree.hpp"

#include <algorithm>
#include <map>

#include "thompson/errors.hpp"

namespace thompson {

bool is_valid_tree(const TreeBits& bits) {
  if (bits.empty() || bits.size() % 2 == 0) return false;
  int excess = 0;  // #1 - #0 over the prefix; must stay >= 0 before the end.
  for (size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c == '1') {
      ++excess;
    } else if (c == '0') {
      --excess;
      if (excess < 0 && i + 1 != bits.size()) return false;
    } else {
      return false;
    }
  }
  return excess == -1;
}

void require_valid_tree(const TreeBits& bits) {
  if (!is_valid_tree(bits)) throw ParseError("invalid tree bitstring: " + bits);
}

int tree_size(const TreeBits& bits) {
  return static_cast<int>(bits.size() / 2);
}

TreeBits caret(const TreeBits& left, const TreeBits& right) {
  TreeBits out;
  out.reserve(1 + left.size() + right.size());
  out.push_back('1');
  out += left;
  out += right;
  return out;
}

std::pair<TreeBits, TreeBits> split_root(const TreeBits& bits) {
  if (bits.size() < 3 || bits[0] != '1') throw DomainError("split_root needs an internal root");
  int excess = 0;
  for (size_t i = 1; i < bits.size(); ++i) {
    excess += bits[i] == '1' ? 1 : -1;
    if (excess < 0) {
      return {bits.substr(1, i), bits.substr(i + 1)};
    }
  }
  throw ParseError("invalid tree bitstring: " + bits);
}

BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan of negative size");
  BigInt c(1);
  for (int m = 1; m <= n; ++m) {
    c = c * 2 * (2 * m - 1) / (m + 1);
  }
  return c;
}

namespace {

// Completion counts for the rank/unrank walk: D[o][e] = number of ways to
// finish a prefix with o ones left and current excess e (#1 - #0 so far).
struct TreeCoder {
  explicit TreeCoder(int n) : n(n), table(n + 1, std::vector<BigInt>(n + 2)) {
    for (int e = 0; e <= n + 1; ++e) table[0][e] = 1;
    for (int o = 1; o <= n; ++o) {
      for (int e = 0; e <= n + 1; ++e) {
        BigInt ways = e + 1 <= n + 1 ? table[o - 1][e + 1] : BigInt(0);
        if (e >= 1) ways += table[o][e - 1];
        table[o][e] = ways;
      }
    }
  }

  BigInt rank(const TreeBits& bits) const {
    BigInt r(0);
    int o = n;
    int e = 0;
    for (char c : bits) {
      if (c == '1') {
        if (e >= 1) r += table[o][e - 1];  // smaller strings place '0' here
        --o;
        ++e;
      } else {
        --e;
        if (e < 0) break;  // final closing leaf
      }
    }
    return r;
  }

  TreeBits unrank(BigInt r) const {
    TreeBits out;
    out.reserve(2 * n + 1);
    int o = n;
    int e = 0;
    for (int pos = 0; pos < 2 * n + 1; ++pos) {
      if (o == 0) {
        out.push_back('0');
        --e;
        continue;
      }
      BigInt zero_ways = e >= 1 ? table[o][e - 1] : BigInt(0);
      if (r < zero_ways) {
        out.push_back('0');
        --e;
      } else {
        r -= zero_ways;
        out.push_back('1');
        --o;
        ++e;
      }
    }
    return out;
  }

  int n;
  std::vector<std::vector<BigInt>> table;
};

}  // namespace

BigInt tree_rank(const TreeBits& bits) {
  require_valid_tree(bits);
  TreeCoder coder(tree_size(bits));
  return coder.rank(bits);
}

TreeBits tree_unrank(int n, const BigInt& r) {
  if (n < 0 || r < 0 || r >= catalan(n)) {
    throw DomainError("tree rank out of range: n=" + std::to_string(n) + " r=" + r.str());
  }
  TreeCoder coder(n);
  return coder.unrank(r);
}

std::vector<TreeBits> enumerate_trees(int n) {
  if (n < 0) throw DomainError("enumerate_trees of negative size");
  std::vector<std::vector<TreeBits>> memo(n + 1);
  memo[0] = {TreeBits("0")};
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      for (const auto& left : memo[i]) {
        for (const auto& right : memo[m - 1 - i]) {
          memo[m].push_back(caret(left, right));
        }
      }
    }
  }
  std::vector<TreeBits> out = std::move(memo[n]);
  std::sort(out.begin(), out.end());
  return out;
}

TreeBits random_tree(int n, RandomStream& rs) {
  if (n < 0) throw DomainError("random_tree of negative size");
  if (n == 0) return TreeBits("0");
  // Remy growth: repeatedly pick a uniform node and a side, splice in a new
  // internal node with a fresh leaf. Plane version is uniform over shapes.
  struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;
  };
  std::vector<Node> nodes;
  nodes.reserve(2 * n + 1);
  nodes.push_back(Node{});
  int root = 0;
  for (int k = 1; k <= n; ++k) {
    int t = rs.below_int(static_cast<int>(nodes.size()));
    bool new_leaf_on_left = rs.coin();
    int u = static_cast<int>(nodes.size());
    nodes.push_back(Node{});  // fresh leaf
    int w = static_cast<int>(nodes.size());
    nodes.push_back(Node{});  // new internal node
    int p = nodes[t].parent;
    nodes[w].parent = p;
    if (p == -1) {
      root = w;
    } else if (nodes[p].left == t) {
      nodes[p].left = w;
    } else {
      nodes[p].right = w;
    }
    nodes[w].left = new_leaf_on_left ? u : t;
    nodes[w].right = new_leaf_on_left ? t : u;
    nodes[t].parent = w;
    nodes[u].parent = w;
  }
  TreeBits out;
  out.reserve(2 * n + 1);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (nodes[v].left == -1) {
      out.push_back('0');
    } else {
      out.push_back('1');
      stack.push_back(nodes[v].right);
      stack.push_back(nodes[v].left);
    }
  }
  return out;
}

std::vector<CircleInterval> leaf_intervals(const TreeBits& bits) {
  require_valid_tree(bits);
  std::vector<CircleInterval> out;
  out.reserve(bits.size() / 2 + 1);
  // Stack of pending arcs; '1' splits the top arc, '0' emits it as a leaf.
  std::vector<std::pair<Dyadic, int>> stack;  // (lo, depth): arc [lo, lo + 2^-depth)
  stack.emplace_back(Dyadic::zero(), 0);
  for (char c : bits) {
    auto [lo, depth] = stack.back();
    stack.pop_back();
    if (c == '1') {
      Dyadic mid = lo + Dyadic::pow2(depth + 1);
      stack.emplace_back(mid, depth + 1);
      stack.emplace_back(lo, depth + 1);
    } else {
      out.emplace_back(lo, Dyadic::pow2(depth));
    }
  }
  return out;
}

}  // namespace thompson
