#include "doctest.h"
#include "thompson/dyadic.hpp"
#include "thompson/rng.hpp"

using namespace thompson;

namespace {

// Random canonical interval set built from dyadic cuts at depth <= 6.
IntervalSet random_set(RandomStream& rs) {
  int arcs = 1 + rs.below_int(4);
  std::vector<CircleInterval> parts;
  for (int a = 0; a < arcs; ++a) {
    int d = 1 + rs.below_int(6);
    BigInt lo_num = rs.below(1ULL << d);
    BigInt len_num = 1 + rs.below((1ULL << d) - 1);
    parts.emplace_back(Dyadic(lo_num, d), Dyadic(len_num, d));
  }
  return IntervalSet::from(parts);
}

}  // namespace

TEST_SUITE("dyadic") {

TEST_CASE("scalar text round trips") {
  CHECK(Dyadic::parse("3/2^3").str() == "3/2^3");
  CHECK(Dyadic::parse("3/2^3") == Dyadic(BigInt(3), 3));
  CHECK(Dyadic::zero().str() == "0/2^0");
  CHECK(rational_str(parse_rational("5/6")) == "5/6");
  CHECK(parse_rational("10/12") == Rational(5, 6));
  CHECK_THROWS_AS(Dyadic::parse("3/3^2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("normalization is idempotent") {
  Dyadic a(BigInt(6), 4);  // 6/16 = 3/8
  CHECK(a == Dyadic(BigInt(3), 3));
  CHECK(a.num() == 3);
  CHECK(a.exp() == 3);
  Dyadic b(BigInt(8), 3);  // 8/8 = 1
  CHECK(b == Dyadic::one());
  CHECK(b.exp() == 0);
  CHECK(rational_mod1(Rational(7, 3)) == Rational(1, 3));
  CHECK(rational_mod1(Rational(-1, 3)) == Rational(2, 3));
}

TEST_CASE("dyadic arithmetic stays exact") {
  Dyadic half = Dyadic::pow2(1);
  Dyadic eighth = Dyadic::pow2(3);
  CHECK((half + eighth).str() == "5/2^3");
  CHECK((half - eighth).str() == "3/2^3");
  CHECK((half * eighth) == Dyadic::pow2(4));
  CHECK(eighth.mul_pow2(3) == Dyadic::one());
  CHECK(Dyadic(BigInt(11), 3).mod1().str() == "3/2^3");
  CHECK(Dyadic(BigInt(-1), 2).mod1().str() == "3/2^2");
  CHECK(Dyadic(BigInt(11), 3).floor() == 1);
}

TEST_CASE("interval membership honors half-open wrap") {
  CircleInterval arc(Dyadic(BigInt(7), 3), Dyadic(BigInt(2), 3));  // [7/8, 9/8)
  CHECK(arc.wraps());
  CHECK(arc.contains(Dyadic(BigInt(7), 3)));
  CHECK(arc.contains(Dyadic::zero()));
  CHECK(!arc.contains(Dyadic::pow2(3)));  // 1/8 is the excluded endpoint
  CHECK(arc.end_mod1() == Dyadic::pow2(3));
  CHECK(CircleInterval::full().contains(Dyadic(BigInt(5), 3)));
  CHECK_THROWS_AS(CircleInterval(Dyadic::zero(), Dyadic::zero()), DomainError);
}

TEST_CASE("affine image maps arcs exactly") {
  CircleInterval arc(Dyadic::pow2(1), Dyadic::pow2(2));  // [1/2, 3/4)
  CircleInterval img = affine_image(arc, -1, Dyadic::pow2(1));
  CHECK(img == CircleInterval(Dyadic(BigInt(3), 2), Dyadic::pow2(3)));  // [3/4, 7/8)
  CHECK_THROWS_AS(affine_image(arc, 3, Dyadic::zero()), CoversCircleError);
}

TEST_CASE("affine image round trips under the inverse law") {
  RandomStream rs(2026);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + rs.below_int(5);
    CircleInterval arc(Dyadic(BigInt(rs.below(1ULL << d)), d),
                       Dyadic(BigInt(1 + rs.below(3)), d));
    int e = 1 + rs.below_int(d - 1);
    Dyadic b(BigInt(rs.below(1ULL << d)), d);
    CircleInterval img = affine_image(arc, -e, b);
    CircleInterval back = affine_image(img, e, (-b).mul_pow2(e));
    CHECK(back.lo == arc.lo.mod1());
    CHECK(back.len == arc.len);
  }
}

TEST_CASE("interval sets canonicalize") {
  IntervalSet s = IntervalSet::from({
      CircleInterval(Dyadic(BigInt(7), 3), Dyadic::pow2(2)),  // [7/8, 9/8)
      CircleInterval(Dyadic::pow2(3), Dyadic::pow2(3)),       // [1/8, 1/4)
      CircleInterval(Dyadic::zero(), Dyadic::pow2(3)),        // [0, 1/8), adjacent
  });
  REQUIRE(s.arcs().size() == 1);
  CHECK(s.arcs()[0] == CircleInterval(Dyadic(BigInt(7), 3), Dyadic(BigInt(3), 3)));
  CHECK(s.total_length() == Dyadic(BigInt(3), 3));

  IntervalSet wrap = IntervalSet::from({CircleInterval(Dyadic(BigInt(7), 3), Dyadic::pow2(2))});
  IntervalSet expect = IntervalSet::from({CircleInterval(Dyadic::pow2(3), Dyadic(BigInt(3), 2))});
  CHECK(wrap.complement() == expect);  // comp [7/8,1/8) = [1/8,7/8)
}

TEST_CASE("complement involutes and lengths add to one") {
  RandomStream rs(77);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet s = random_set(rs);
    CHECK(s.complement().complement() == s);
    CHECK(s.total_length() + s.complement().total_length() == Dyadic::one());
  }
  CHECK(IntervalSet::full_circle().complement().is_empty());
  CHECK(IntervalSet::empty_set().complement().is_full());
}

TEST_CASE("containment is antisymmetric") {
  RandomStream rs(78);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_set(rs);
    IntervalSet b = random_set(rs);
    bool ab = a.contains(b);
    bool ba = b.contains(a);
    if (ab && ba) CHECK(a == b);
    if (a == b) CHECK((ab && ba));
    CHECK(a.contains(a.intersect(b)));
    CHECK(a.unite(b).contains(a));
    CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
  }
}

TEST_CASE("hull is the complement of the largest gap") {
  IntervalSet s = IntervalSet::from({
      CircleInterval(Dyadic::zero(), Dyadic::pow2(3)),          // [0, 1/8)
      CircleInterval(Dyadic(BigInt(3), 3), Dyadic::pow2(3)),    // [3/8, 1/2)
  });
  // Gaps: [1/8,3/8) and [1/2,1); hull removes the larger one.
  CHECK(s.hull() == CircleInterval(Dyadic::zero(), Dyadic::pow2(1)));
  CHECK(IntervalSet::full_circle().hull() == CircleInterval::full());
  CHECK_THROWS_AS(IntervalSet::empty_set().hull(), DomainError);

  RandomStream rs(79);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalSet s2 = random_set(rs);
    IntervalSet h = IntervalSet::from({s2.hull()});
    CHECK(h.contains(s2));
  }
}

TEST_CASE("at most one wrapping arc, stored last") {
  RandomStream rs(80);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalSet s = random_set(rs);
    int wrapping = 0;
    for (size_t i = 0; i < s.arcs().size(); ++i) {
      if (s.arcs()[i].wraps()) {
        ++wrapping;
        CHECK(i + 1 == s.arcs().size());
      }
      if (i + 1 < s.arcs().size()) CHECK(s.arcs()[i].lo < s.arcs()[i + 1].lo);
    }
    CHECK(wrapping <= 1);
  }
}

}  // TEST_SUITE
