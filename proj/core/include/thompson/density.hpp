#pragma once

#include <functional>
#include <optional>
#include <string>

#include "thompson/element.hpp"

namespace thompson {

// All k-tuples of size-n diagrams.
struct SphereSpec {
  Group group = Group::T;
  int n = 1;
  int k = 1;
};

BigInt sphere_size(const SphereSpec& spec);

// Named element predicate usable for either group.
struct Predicate {
  std::string name;
  std::function<bool(const TElement&)> t_fn;
  std::function<bool(const VElement&)> v_fn;
};

// Names: ns-family, north-south, identity, pingpong-u, pingpong-v.
Predicate named_predicate(const std::string& name);
const std::vector<std::string>& predicate_names();

struct DensityEstimate {
  std::string method;  // "Exact" or "MonteCarlo"
  unsigned long long hits = 0;
  unsigned long long trials = 0;
  Rational exact_value;  // hits / trials
  double estimate = 0.0;
  double ci_low = 0.0;  // 95% Wilson interval; collapses to the point for Exact
  double ci_high = 0.0;
  std::optional<unsigned long long> seed;
};

inline constexpr unsigned long long kDefaultMaxEvals = 100000000ULL;
inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

// Current feasibility bound: THOMPSON_MAX_EVALS env override or the default.
unsigned long long feasibility_bound();

std::pair<double, double> wilson_interval(unsigned long long hits, unsigned long long trials,
                                          double z);

// Exhaustive census over the k=1 sphere in canonical order (source rank, then
// target rank, then marking index; V markings in lexicographic permutation
// order). Workers partition the flattened index range; results are identical
// for any worker count. max_evals 0 means feasibility_bound().
DensityEstimate exact_density(const SphereSpec& spec, const Predicate& predicate,
                              int workers = 1, unsigned long long max_evals = 0);

// Deterministic Monte Carlo: trial t draws its own stream from
// (master_seed, t), so results are bit-identical for any worker count.
// A k-tuple is a hit when every component satisfies the predicate.
DensityEstimate mc_density(const SphereSpec& spec, const Predicate& predicate,
                           unsigned long long trials, unsigned long long master_seed,
                           int workers = 1);

}  // namespace thompson
