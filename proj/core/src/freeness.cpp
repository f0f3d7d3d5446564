#include "thompson/freeness.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "thompson/errors.hpp"
#include "thompson/serialize.hpp"
#include "thompson/tree.hpp"

namespace thompson {

namespace {

constexpr unsigned long long kPairSeed = 0x7e0bb5c4a3d21f96ULL;

struct SideCandidate {
  CircleInterval p;
  CircleInterval q;
};

// Dyadic grid arcs of depth dd around x: the containing arc plus the two
// double-width arcs covering it (skipped at dd=1 where they would be full).
std::vector<CircleInterval> grid_arcs(const Rational& x, int dd) {
  BigInt j0 = (numerator(x) << dd) / denominator(x);
  std::vector<CircleInterval> arcs;
  arcs.emplace_back(Dyadic(j0, dd).mod1(), Dyadic::pow2(dd));
  if (dd >= 2) {
    arcs.emplace_back(Dyadic(j0 - 1, dd).mod1(), Dyadic::pow2(dd - 1));
    arcs.emplace_back(Dyadic(j0, dd).mod1(), Dyadic::pow2(dd - 1));
  }
  return arcs;
}

// One-generator candidates at exactly depth dd: Q from the grid around the
// repelling point, P the hull of the exact image of the complement; kept when
// m(comp Q) stays in P, P misses Q, and m_inv(comp P) lands in Q.
std::vector<SideCandidate> side_candidates(const PLMap& m, const PLMap& m_inv,
                                           const Rational& repelling, int dd) {
  std::vector<SideCandidate> out;
  for (const auto& q : grid_arcs(repelling, dd)) {
    IntervalSet q_set = IntervalSet::from({q});
    IntervalSet comp_q = q_set.complement();
    if (comp_q.is_empty()) continue;
    CircleInterval p = map_set(m, comp_q).hull();
    if (p.is_full()) continue;
    IntervalSet p_set = IntervalSet::from({p});
    if (!p_set.disjoint_from(q_set)) continue;
    if (!q_set.contains(map_set(m_inv, p_set.complement()))) continue;
    out.push_back(SideCandidate{p, q});
  }
  return out;
}

std::vector<int> box_labels(int n, int a, int b, int c) {
  std::vector<int> labels;
  for (int l = 0; l <= n; ++l) {
    if (l != a && l != b && l != c) labels.push_back(l);
  }
  return labels;
}

// Uniform shuffle conditioned on the special label staying interior.
void shuffle_interior(std::vector<int>& labels, int special, RandomStream& rs) {
  do {
    for (int i = static_cast<int>(labels.size()) - 1; i >= 1; --i) {
      int j = rs.below_int(i + 1);
      std::swap(labels[i], labels[j]);
    }
  } while (labels.front() == special || labels.back() == special);
}

}  // namespace

PingPongPair sample_pingpong_pair(Group group, int n, unsigned long long index) {
  if (n < 6) throw ConstraintError("ping-pong families need n >= 6");
  RandomStream rs(kPairSeed, index);
  if (group == Group::T) {
    TreeBits su = random_tree(n - 3, rs);
    TreeBits tu = random_tree(n - 3, rs);
    TElement ue = make_pingpong_u_T(n, su, tu, 1 + rs.below_int(n - 5));
    TreeBits sv = random_tree(n - 3, rs);
    TreeBits tv = random_tree(n - 3, rs);
    TElement ve = make_pingpong_v_T(n, sv, tv, 1 + rs.below_int(n - 5));
    return PingPongPair{group, element_text(ue), element_text(ve), to_pl_map(ue), to_pl_map(ve)};
  }
  TreeBits su = random_tree(n - 3, rs);
  TreeBits tu = random_tree(n - 3, rs);
  int ui, uj, uk;
  do {
    ui = 3 + rs.below_int(n - 2);
    uj = 3 + rs.below_int(n - 2);
    uk = 3 + rs.below_int(n - 3);
  } while (ui == uj || ui == uk || uj == uk);
  std::vector<int> u_order = box_labels(n, ui, uj, uk);
  shuffle_interior(u_order, 0, rs);
  VElement ue = make_pingpong_u_V(n, su, tu, ui, uj, uk, u_order);
  TreeBits sv = random_tree(n - 3, rs);
  TreeBits tv = random_tree(n - 3, rs);
  int vi, vj, vk;
  do {
    vi = 1 + rs.below_int(n - 2);
    vj = 1 + rs.below_int(n - 3);
    vk = 1 + rs.below_int(n - 2);
  } while (vi == vj || vi == vk || vj == vk);
  std::vector<int> v_order = box_labels(n, vi, vj, vk);
  shuffle_interior(v_order, n - 1, rs);
  VElement ve = make_pingpong_v_V(n, sv, tv, vi, vj, vk, v_order);
  return PingPongPair{group, element_text(ue), element_text(ve), to_pl_map(ue), to_pl_map(ve)};
}

CertificateSearch find_certificate(const PLMap& u, const PLMap& v, int max_depth) {
  if (max_depth < 1) throw DomainError("max_depth must be >= 1");
  CertificateSearch result;
  DynamicsReport ur = fixed_points(u);
  DynamicsReport vr = fixed_points(v);
  const FixedPoint* rep_u = repelling_point(ur);
  const FixedPoint* rep_v = repelling_point(vr);
  if (rep_u == nullptr || rep_v == nullptr) {
    result.failure = "a generator has no repelling fixed point";
    return result;
  }
  PLMap u_inv = invert(u);
  PLMap v_inv = invert(v);
  std::vector<std::vector<SideCandidate>> u_cands(max_depth + 1);
  std::vector<std::vector<SideCandidate>> v_cands(max_depth + 1);
  for (int dd = 1; dd <= max_depth; ++dd) {
    u_cands[dd] = side_candidates(u, u_inv, rep_u->location, dd);
    v_cands[dd] = side_candidates(v, v_inv, rep_v->location, dd);
  }
  for (int d = 1; d <= max_depth; ++d) {
    for (int du = 1; du <= d; ++du) {
      for (int dv = 1; dv <= d; ++dv) {
        if (std::max(du, dv) != d) continue;
        for (const auto& cu : u_cands[du]) {
          for (const auto& cv : v_cands[dv]) {
            IntervalSet pu = IntervalSet::from({cu.p});
            IntervalSet qu = IntervalSet::from({cu.q});
            IntervalSet pv = IntervalSet::from({cv.p});
            IntervalSet qv = IntervalSet::from({cv.q});
            if (!pu.disjoint_from(pv) || !pu.disjoint_from(qv) || !qu.disjoint_from(pv) ||
                !qu.disjoint_from(qv)) {
              result.failure = "cross disjointness failed at depth " + std::to_string(d);
              continue;
            }
            Certificate cert{cu.p, cu.q, cv.p, cv.q, d};
            if (!verify_certificate(u, v, cert)) {
              result.failure = "verification failed at depth " + std::to_string(d);
              continue;
            }
            result.certificate = cert;
            result.failure.clear();
            return result;
          }
        }
      }
    }
  }
  if (result.failure.empty()) {
    result.failure = "no admissible arc pair within depth " + std::to_string(max_depth);
  }
  return result;
}

bool verify_certificate(const PLMap& u, const PLMap& v, const Certificate& cert) {
  IntervalSet pu = IntervalSet::from({cert.P_u});
  IntervalSet qu = IntervalSet::from({cert.Q_u});
  IntervalSet pv = IntervalSet::from({cert.P_v});
  IntervalSet qv = IntervalSet::from({cert.Q_v});
  if (!pu.disjoint_from(qu) || !pv.disjoint_from(qv)) return false;
  if (!pu.unite(qu).disjoint_from(pv.unite(qv))) return false;
  if (!pu.contains(map_set(u, qu.complement()))) return false;
  if (!qu.contains(map_set(invert(u), pu.complement()))) return false;
  if (!pv.contains(map_set(v, qv.complement()))) return false;
  if (!qv.contains(map_set(invert(v), pv.complement()))) return false;
  return true;
}

std::vector<std::string> random_word_test(const PLMap& u, const PLMap& v, int max_len,
                                          int word_count, unsigned long long seed) {
  if (max_len < 1) throw DomainError("word length bound must be >= 1");
  PLMap u_inv = invert(u);
  PLMap v_inv = invert(v);
  const PLMap* letters[4] = {&u, &u_inv, &v, &v_inv};
  const char* names[4] = {"u", "u^-1", "v", "v^-1"};
  const int inverse_of[4] = {1, 0, 3, 2};
  RandomStream rs(seed);
  std::vector<std::string> identities;
  for (int w = 0; w < word_count; ++w) {
    int len = 1 + rs.below_int(max_len);
    int prev = rs.below_int(4);
    PLMap acc = *letters[prev];
    std::string text = names[prev];
    for (int pos = 1; pos < len; ++pos) {
      int r = rs.below_int(3);
      int choice = -1;
      for (int cand = 0, seen = 0; cand < 4; ++cand) {
        if (cand == inverse_of[prev]) continue;
        if (seen++ == r) {
          choice = cand;
          break;
        }
      }
      acc = compose(acc, *letters[choice]);
      text += ' ';
      text += names[choice];
      prev = choice;
    }
    if (acc.is_identity()) identities.push_back(text);
  }
  return identities;
}

}  // namespace thompson
