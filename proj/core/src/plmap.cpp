#include "thompson/plmap.hpp"

#include <algorithm>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

Rational pow2_rational(int e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << (-e));
}

Dyadic apply_law(int e, const Dyadic& b, const Dyadic& x) {
  return (x.mul_pow2(e) + b).mod1();
}

}  // namespace

PLMap PLMap::identity() {
  PLMap m;
  m.branches_.push_back(Branch{CircleInterval::full(), 0, Dyadic::zero()});
  return m;
}

PLMap PLMap::from_branches(std::vector<Branch> branches) {
  if (branches.empty()) throw DomainError("PLMap needs at least one branch");
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return a.dom.lo < b.dom.lo; });
  if (!branches.front().dom.lo.is_zero()) throw DomainError("branch domains must start at 0");
  for (size_t i = 0; i + 1 < branches.size(); ++i) {
    if (branches[i].dom.hi() != branches[i + 1].dom.lo) {
      throw DomainError("branch domains must be consecutive");
    }
  }
  if (branches.back().dom.hi() != Dyadic::one()) throw DomainError("branch domains must end at 1");
  PLMap m;
  for (auto& br : branches) {
    if (!m.branches_.empty() && m.branches_.back().same_law(br)) {
      Branch& prev = m.branches_.back();
      prev.dom = CircleInterval(prev.dom.lo, prev.dom.len + br.dom.len);
    } else {
      m.branches_.push_back(std::move(br));
    }
  }
  return m;
}

size_t PLMap::branch_index(const Dyadic& x) const {
  // Domains are consecutive from 0, so pick the last branch with lo <= x.
  size_t lo = 0;
  size_t hi = branches_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (branches_[mid].dom.lo <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

size_t PLMap::branch_index(const Rational& x) const {
  size_t lo = 0;
  size_t hi = branches_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (branches_[mid].dom.lo.to_rational() <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational PLMap::evaluate(const Rational& x) const {
  const Branch& br = branches_[branch_index(x)];
  return rational_mod1(x * pow2_rational(br.e) + br.b.to_rational());
}

Dyadic PLMap::evaluate(const Dyadic& x) const {
  const Branch& br = branches_[branch_index(x)];
  return apply_law(br.e, br.b, x);
}

bool PLMap::is_identity() const {
  return branches_.size() == 1 && branches_[0].e == 0 && branches_[0].b.is_zero();
}

CircleInterval PLMap::branch_image(size_t i) const {
  const Branch& br = branches_[i];
  return affine_image(br.dom, br.e, br.b);
}

namespace {

// The unique x with g(x) = y, computed through the branch whose image holds y.
Dyadic preimage(const PLMap& g, const Dyadic& y) {
  for (size_t i = 0; i < g.branches().size(); ++i) {
    const Branch& br = g.branches()[i];
    CircleInterval img = affine_image(br.dom, br.e, br.b);
    Dyadic delta = (y - img.lo).mod1();
    if (delta < img.len) {
      return br.dom.lo + delta.mul_pow2(-br.e);
    }
  }
  throw DomainError("preimage not found; map is not a bijection");
}

}  // namespace

PLMap compose(const PLMap& f, const PLMap& g) {
  // Cut at every g breakpoint and at every g-preimage of an f breakpoint.
  // 0 is always an f breakpoint, so no piece's g-image wraps internally and
  // each piece meets a single f branch.
  std::vector<Dyadic> cuts;
  cuts.reserve(f.branch_count() + g.branch_count());
  for (const Branch& br : g.branches()) cuts.push_back(br.dom.lo);
  for (const Branch& br : f.branches()) cuts.push_back(preimage(g, br.dom.lo));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Branch> out;
  out.reserve(cuts.size());
  for (size_t i = 0; i < cuts.size(); ++i) {
    const Dyadic& x0 = cuts[i];
    Dyadic x1 = i + 1 < cuts.size() ? cuts[i + 1] : Dyadic::one();
    const Branch& gb = g.branches()[g.branch_index(x0)];
    Dyadic y0 = apply_law(gb.e, gb.b, x0);
    const Branch& fb = f.branches()[f.branch_index(y0)];
    Dyadic fy = apply_law(fb.e, fb.b, y0);
    int e = fb.e + gb.e;
    Dyadic b = (fy - x0.mul_pow2(e)).mod1();
    out.push_back(Branch{CircleInterval(x0, x1 - x0), e, b});
  }
  return PLMap::from_branches(std::move(out));
}

PLMap invert(const PLMap& f) {
  std::vector<Branch> out;
  out.reserve(f.branch_count() + 1);
  for (const Branch& br : f.branches()) {
    CircleInterval img = affine_image(br.dom, br.e, br.b);
    // Split a wrapping image at 0; each piece becomes one inverse branch.
    std::vector<CircleInterval> segs;
    if (img.is_full()) {
      segs.push_back(CircleInterval::full());
    } else if (img.wraps()) {
      segs.emplace_back(img.lo, Dyadic::one() - img.lo);
      segs.emplace_back(Dyadic::zero(), img.end_mod1());
    } else {
      segs.push_back(img);
    }
    for (const auto& seg : segs) {
      Dyadic delta = (seg.lo - img.lo).mod1();
      Dyadic x_at_lo = br.dom.lo + delta.mul_pow2(-br.e);
      Dyadic b = (x_at_lo - seg.lo.mul_pow2(-br.e)).mod1();
      out.push_back(Branch{seg, -br.e, b});
    }
  }
  return PLMap::from_branches(std::move(out));
}

IntervalSet map_set(const PLMap& f, const IntervalSet& s) {
  std::vector<CircleInterval> images;
  for (const CircleInterval& arc : s.arcs()) {
    std::vector<CircleInterval> segs;
    if (arc.is_full()) {
      return IntervalSet::full_circle();
    }
    if (arc.wraps()) {
      segs.emplace_back(arc.lo, Dyadic::one() - arc.lo);
      segs.emplace_back(Dyadic::zero(), arc.end_mod1());
    } else {
      segs.push_back(arc);
    }
    for (const auto& seg : segs) {
      for (const Branch& br : f.branches()) {
        Dyadic lo = std::max(seg.lo, br.dom.lo);
        Dyadic hi = std::min(seg.hi(), br.dom.hi());
        if (lo < hi) {
          images.push_back(affine_image(CircleInterval(lo, hi - lo), br.e, br.b));
        }
      }
    }
  }
  return IntervalSet::from(std::move(images));
}

}  // namespace thompson
