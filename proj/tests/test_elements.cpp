#include <numeric>
#include <set>

#include "doctest.h"
#include "thompson/element.hpp"
#include "thompson/tree.hpp"

using namespace thompson;

namespace {

TElement random_t(int n, RandomStream& rs) {
  TreeBits s = random_tree(n, rs);
  TreeBits t = random_tree(n, rs);
  return make_t_element(s, t, rs.below_int(n + 1));
}

VElement random_v(int n, RandomStream& rs) {
  TreeBits s = random_tree(n, rs);
  TreeBits t = random_tree(n, rs);
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n; i > 0; --i) std::swap(perm[i], perm[rs.below_int(i + 1)]);
  return make_v_element(s, t, perm);
}

}  // namespace

TEST_SUITE("elements") {

TEST_CASE("unreduced diagram counts") {
  CHECK(diagram_count(Group::T, 3) == 100);
  CHECK(diagram_count(Group::V, 3) == 600);
  CHECK(diagram_count(Group::T, 4) == 980);
  CHECK(diagram_count(Group::V, 0) == 1);
  CHECK(diagram_count(Group::T, 0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
}

TEST_CASE("group names parse") {
  CHECK(group_name(Group::T) == "T");
  CHECK(group_name(Group::V) == "V");
  CHECK(parse_group("V") == Group::V);
  CHECK_THROWS_AS(parse_group("F"), ParseError);
}

TEST_CASE("permutation unrank is lexicographic and complete") {
  CHECK(perm_unrank(3, 0) == std::vector<int>{0, 1, 2});
  CHECK(perm_unrank(3, 5) == std::vector<int>{2, 1, 0});
  std::set<std::vector<int>> seen;
  std::vector<int> prev;
  for (unsigned long long r = 0; r < 24; ++r) {
    std::vector<int> p = perm_unrank(4, r);
    if (!prev.empty()) CHECK(prev < p);
    prev = p;
    seen.insert(p);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("constructors validate their input") {
  CHECK_THROWS_AS(make_t_element("10100", "1101000", 0), ConstraintError);  // size mismatch
  CHECK_THROWS_AS(make_t_element("10100", "10100", 3), ConstraintError);    // mark out of range
  CHECK_THROWS_AS(make_t_element("10", "10", 0), ParseError);               // not a tree
  CHECK_THROWS_AS(make_v_element("10100", "10100", {0, 1, 1}), ConstraintError);
  CHECK_THROWS_AS(make_v_element("10100", "10100", {0, 1}), ConstraintError);
  CHECK(make_t_element("10100", "11000", 2).mark == 2);
}

TEST_CASE("mark shift and full marking agree") {
  RandomStream rs(301);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rs.below_int(8);
    TElement t = random_t(n, rs);
    VElement v = as_v_element(t);
    CHECK(v.perm[0] == t.mark);
    CHECK(to_pl_map(t) == to_pl_map(v));
  }
}

TEST_CASE("branch domains and images partition the circle") {
  RandomStream rs(302);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + rs.below_int(8);
    PLMap m = trial % 2 == 0 ? to_pl_map(random_t(n, rs)) : to_pl_map(random_v(n, rs));
    std::vector<CircleInterval> doms;
    std::vector<CircleInterval> imgs;
    for (size_t i = 0; i < m.branch_count(); ++i) {
      doms.push_back(m.branches()[i].dom);
      imgs.push_back(m.branch_image(i));
    }
    Dyadic dom_total = Dyadic::zero();
    Dyadic img_total = Dyadic::zero();
    for (const auto& a : doms) dom_total = dom_total + a.len;
    for (const auto& a : imgs) img_total = img_total + a.len;
    CHECK(dom_total == Dyadic::one());
    CHECK(img_total == Dyadic::one());
    CHECK(IntervalSet::from(doms).is_full());
    CHECK(IntervalSet::from(imgs).is_full());
  }
}

TEST_CASE("T elements rotate the target leaves cyclically") {
  RandomStream rs(303);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + rs.below_int(7);
    TElement t = random_t(n, rs);
    PLMap m = to_pl_map(t);
    std::vector<CircleInterval> src = leaf_intervals(t.source);
    std::vector<CircleInterval> tgt = leaf_intervals(t.target);
    for (int j = 0; j <= n; ++j) {
      IntervalSet image = map_set(m, IntervalSet::from({src[j]}));
      int pos = (t.mark + j) % (n + 1);
      CHECK(image == IntervalSet::from({tgt[pos]}));
    }
  }
}

TEST_CASE("evaluation matches the leaf-to-leaf law") {
  PLMap rot = to_pl_map(make_t_element("100", "100", 1));
  CHECK(rot.evaluate(Rational(3, 4)) == Rational(1, 4));
  CHECK(rot.evaluate(Dyadic::zero()) == Dyadic::pow2(1));
  PLMap e3 = to_pl_map(make_t_element("1010100", "1101000", 1));
  CHECK(e3.evaluate(Rational(1, 3)) == Rational(1, 3));
  CHECK(e3.evaluate(Rational(5, 6)) == Rational(5, 6));
  CHECK(e3.evaluate(Dyadic::zero()) == Dyadic::pow2(2));
}

TEST_CASE("group axioms hold exactly on random samples") {
  RandomStream rs(304);
  PLMap id = PLMap::identity();
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rs.below_int(6);
    PLMap f = to_pl_map(random_v(n, rs));
    PLMap g = to_pl_map(random_t(n, rs));
    PLMap h = to_pl_map(random_v(n, rs));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, id) == f);
    CHECK(compose(id, f) == f);
    CHECK(compose(f, invert(f)).is_identity());
    CHECK(compose(invert(f), f).is_identity());
    CHECK(invert(invert(g)) == g);
  }
}

TEST_CASE("composition agrees with pointwise evaluation") {
  RandomStream rs(305);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + rs.below_int(6);
    PLMap f = to_pl_map(random_t(n, rs));
    PLMap g = to_pl_map(random_v(n, rs));
    PLMap fg = compose(f, g);
    for (int pt = 0; pt < 25; ++pt) {
      Rational x(BigInt(rs.below(997)), BigInt(997));
      CHECK(fg.evaluate(x) == f.evaluate(g.evaluate(x)));
    }
  }
}

}  // TEST_SUITE
