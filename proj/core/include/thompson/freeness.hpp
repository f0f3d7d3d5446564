#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thompson/dynamics.hpp"
#include "thompson/element.hpp"
#include "thompson/rng.hpp"

namespace thompson {

// Ping-pong generator families. The u shapes put the attracting neighborhood
// in (0,1/4] and the repelling one in [3/4,1); the v shapes are the half-turn
// mirror with attracting in (1/2,3/4] and repelling in [1/4,1/2).

// u in T: source = caret(caret(0,1), caret(2, s_subtree)),
// target = caret(caret(t_subtree, leaf), caret(leaf, leaf)); label 0 sits at
// box position zero_position in [1, n-5] (interior, and labels 1, 2 stay in
// the box too).
TElement make_pingpong_u_T(int n, const TreeBits& s_subtree, const TreeBits& t_subtree,
                           int zero_position);
// v in T: source = caret(caret(0, s_subtree), caret(leaf, leaf)),
// target = caret(caret(leaf, leaf), caret(t_subtree, leaf)); zero_position in
// [1, n-5] places label n-1 at that box position (mark = zero_position + 4).
TElement make_pingpong_v_T(int n, const TreeBits& s_subtree, const TreeBits& t_subtree,
                           int zero_position);
bool is_pingpong_u_T(const TElement& elem);
bool is_pingpong_v_T(const TElement& elem);
BigInt pingpong_count_T(int n);  // C_{n-3}^2 (n-5) per generator family
BigInt pingpong_pair_count_T(int n);

// u in V: same trees as u in T; target box (positions 0..n-3) carries
// block_order, positions n-2, n-1, n carry labels i, j, k.
// Label bullets: i not in {0,1}; j not in {0,2,i}; k not in {0,1,2,n,i,j};
// label 0 interior to the box.
VElement make_pingpong_u_V(int n, const TreeBits& s_subtree, const TreeBits& t_subtree, int i,
                           int j, int k, const std::vector<int>& block_order);
// v in V: same trees as v in T; positions 0, 1, n carry labels i, j, k and the
// box (positions 2..n-1) carries block_order. Mirrored bullets:
// i not in {0,n-1}; j in [1,n-3] minus {i}; k not in {n,n-1,i,j};
// label n-1 interior to the box.
VElement make_pingpong_v_V(int n, const TreeBits& s_subtree, const TreeBits& t_subtree, int i,
                           int j, int k, const std::vector<int>& block_order);
bool is_pingpong_u_V(const VElement& elem);
bool is_pingpong_v_V(const VElement& elem);

// Strict bullet enumeration: (n-3)(n^2-5n+7) label triples per family.
BigInt pingpong_tuple_count_V(int n);
// Interior box orderings of the n-2 block labels: (n-3)(n-4)(n-4)!.
BigInt pingpong_block_order_count(int n);
// Ground truth adopted from the strict bullets:
// [C_{n-3}^2 (n-3)(n-4)(n-4)! (n-3)(n^2-5n+7)]^2.
BigInt pingpong_pair_count_V(int n);

// Closed-form pair ratios; both converge to 2^-24.
Rational pingpong_ratio_T(int n);  // C_{n-3}^4 (n-5)^2 / (C_n^4 (n+1)^2)
// Built from the factored pair-count product
// p_n = C_{n-3}^4 (n-4)!^2 (n-1)^2 (n-2) (n-3)^5 (n-4)^2 over C_n^4 ((n+1)!)^2.
Rational pingpong_ratio_V(int n);

struct PingPongPair {
  Group group = Group::T;
  std::string u_text;  // serialized elements for reports
  std::string v_text;
  PLMap u;
  PLMap v;
};

// Deterministic family pair: T pairs are arbitrary family members; V pairs
// are sampled from the one-step-certifiable interior labelings, where the
// three special target leaves take box source labels only (for u: i, j in
// [3,n], k in [3,n-1]; for v: i, k in [1,n-2], j in [1,n-3]).
PingPongPair sample_pingpong_pair(Group group, int n, unsigned long long index);

// Ping-pong certificate: four pairwise-disjoint half-open dyadic arcs.
// The conditions u(comp Q_u) in P_u, u^-1(comp P_u) in Q_u (and the v pair)
// plus disjointness give, for every nonzero power: u^k(X_v) in X_u and
// v^k(X_u) in X_v with X_u = P_u + Q_u, X_v = P_v + Q_v; by the ping-pong
// lemma <u,v> is free of rank 2. Induction step: P_u misses Q_u, so
// u(P_u) in P_u and u^k(X_v) stays in P_u; mirrored for inverses and for v.
struct Certificate {
  CircleInterval P_u;
  CircleInterval Q_u;
  CircleInterval P_v;
  CircleInterval Q_v;
  int depth = 0;
};

struct CertificateSearch {
  std::optional<Certificate> certificate;
  std::string failure;  // last failing condition when not found
};

// Searches dyadic grid arcs around each repelling fixed point, radius halving
// down to 2^-max_depth; P arcs are hulls of the exact one-step images of the
// complements. Returns the first success (largest radius, deterministic
// order). Never returns an unverified certificate.
CertificateSearch find_certificate(const PLMap& u, const PLMap& v, int max_depth);

// Exact re-check of the six conditions: the four containments, P/Q
// disjointness per generator, and X_u, X_v disjointness across generators.
bool verify_certificate(const PLMap& u, const PLMap& v, const Certificate& cert);

// Samples reduced words over {u, u^-1, v, v^-1} (length uniform in
// [1, max_len], uniform among reduced words of that length), composes
// exactly, and returns every word that evaluates to the identity.
std::vector<std::string> random_word_test(const PLMap& u, const PLMap& v, int max_len,
                                          int word_count, unsigned long long seed);

}  // namespace thompson
