#include "thompson/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "thompson/dynamics.hpp"
#include "thompson/errors.hpp"
#include "thompson/freeness.hpp"
#include "thompson/rng.hpp"

namespace thompson {

BigInt sphere_size(const SphereSpec& spec) {
  if (spec.k < 1) throw DomainError("sphere arity must be >= 1");
  BigInt single = diagram_count(spec.group, spec.n);
  BigInt total(1);
  for (int i = 0; i < spec.k; ++i) total *= single;
  return total;
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {"ns-family", "north-south", "identity",
                                                 "pingpong-u", "pingpong-v"};
  return names;
}

Predicate named_predicate(const std::string& name) {
  Predicate p;
  p.name = name;
  if (name == "ns-family") {
    p.t_fn = [](const TElement& e) { return is_ns_family_T(e); };
    p.v_fn = [](const VElement& e) { return is_ns_family_V(e); };
  } else if (name == "north-south") {
    p.t_fn = [](const TElement& e) { return fixed_points(to_pl_map(e)).is_north_south; };
    p.v_fn = [](const VElement& e) { return fixed_points(to_pl_map(e)).is_north_south; };
  } else if (name == "identity") {
    p.t_fn = [](const TElement& e) { return to_pl_map(e).is_identity(); };
    p.v_fn = [](const VElement& e) { return to_pl_map(e).is_identity(); };
  } else if (name == "pingpong-u") {
    p.t_fn = [](const TElement& e) { return is_pingpong_u_T(e); };
    p.v_fn = [](const VElement& e) { return is_pingpong_u_V(e); };
  } else if (name == "pingpong-v") {
    p.t_fn = [](const TElement& e) { return is_pingpong_v_T(e); };
    p.v_fn = [](const VElement& e) { return is_pingpong_v_V(e); };
  } else {
    throw ParseError("unknown predicate: " + name);
  }
  return p;
}

unsigned long long feasibility_bound() {
  const char* env = std::getenv("THOMPSON_MAX_EVALS");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxEvals;
}

std::pair<double, double> wilson_interval(unsigned long long hits, unsigned long long trials,
                                          double z) {
  if (trials == 0) return {0.0, 1.0};
  double n = static_cast<double>(trials);
  double p = static_cast<double>(hits) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  double lo = std::max(0.0, center - half);
  double hi = std::min(1.0, center + half);
  return {lo, hi};
}

namespace {

DensityEstimate finish_estimate(std::string method, unsigned long long hits,
                                unsigned long long trials,
                                std::optional<unsigned long long> seed) {
  DensityEstimate est;
  est.method = std::move(method);
  est.hits = hits;
  est.trials = trials;
  est.exact_value = trials == 0 ? Rational(0) : Rational(BigInt(hits), BigInt(trials));
  est.estimate = trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
  if (est.method == "Exact") {
    est.ci_low = est.estimate;
    est.ci_high = est.estimate;
  } else {
    auto [lo, hi] = wilson_interval(hits, trials, kZ95);
    est.ci_low = lo;
    est.ci_high = hi;
  }
  est.seed = seed;
  return est;
}

// Walks a contiguous range of the flattened census index
// (src_rank * C + tgt_rank) * M + marking_index, caching unranked trees.
template <typename Visit>
void walk_census_range(int n, const BigInt& c_n, unsigned long long m_count,
                       unsigned long long lo, unsigned long long hi, Visit&& visit) {
  if (lo >= hi) return;
  unsigned long long c = c_n.convert_to<unsigned long long>();
  unsigned long long per_src = c * m_count;
  unsigned long long idx = lo;
  TreeBits src;
  TreeBits tgt;
  unsigned long long cached_src = per_src + 1;  // sentinel
  unsigned long long cached_tgt = 0;
  bool tgt_valid = false;
  while (idx < hi) {
    unsigned long long src_rank = idx / per_src;
    unsigned long long rem = idx % per_src;
    unsigned long long tgt_rank = rem / m_count;
    unsigned long long m_idx = rem % m_count;
    if (cached_src != src_rank) {
      src = tree_unrank(n, BigInt(src_rank));
      cached_src = src_rank;
      tgt_valid = false;
    }
    if (!tgt_valid || cached_tgt != tgt_rank) {
      tgt = tree_unrank(n, BigInt(tgt_rank));
      cached_tgt = tgt_rank;
      tgt_valid = true;
    }
    unsigned long long run = std::min(m_count - m_idx, hi - idx);
    for (unsigned long long m = m_idx; m < m_idx + run; ++m) {
      visit(src, tgt, m);
    }
    idx += run;
  }
}

}  // namespace

DensityEstimate exact_density(const SphereSpec& spec, const Predicate& predicate, int workers,
                              unsigned long long max_evals) {
  if (spec.k != 1) throw DomainError("exact_density is defined for k = 1 spheres");
  if (workers < 1) throw DomainError("workers must be >= 1");
  unsigned long long bound = max_evals == 0 ? feasibility_bound() : max_evals;
  BigInt total_big = sphere_size(spec);
  if (total_big > bound) {
    throw FeasibilityError("census of " + total_big.str() + " diagrams exceeds the bound of " +
                           std::to_string(bound) + " predicate evaluations");
  }
  unsigned long long total = total_big.convert_to<unsigned long long>();
  int n = spec.n;
  BigInt c_n = catalan(n);
  unsigned long long m_count =
      spec.group == Group::T
          ? static_cast<unsigned long long>(n + 1)
          : factorial(n + 1).convert_to<unsigned long long>();

  std::vector<unsigned long long> hits(workers, 0);
  auto run_worker = [&](int w) {
    unsigned long long lo = total / workers * w + std::min<unsigned long long>(w, total % workers);
    unsigned long long hi =
        total / workers * (w + 1) + std::min<unsigned long long>(w + 1, total % workers);
    unsigned long long local = 0;
    if (spec.group == Group::T) {
      walk_census_range(n, c_n, m_count, lo, hi,
                        [&](const TreeBits& src, const TreeBits& tgt, unsigned long long m) {
                          TElement e{src, tgt, static_cast<int>(m)};
                          if (predicate.t_fn(e)) ++local;
                        });
    } else {
      walk_census_range(n, c_n, m_count, lo, hi,
                        [&](const TreeBits& src, const TreeBits& tgt, unsigned long long m) {
                          VElement e{src, tgt, perm_unrank(n + 1, m)};
                          if (predicate.v_fn(e)) ++local;
                        });
    }
    hits[w] = local;
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }
  unsigned long long hit_sum = 0;
  for (auto h : hits) hit_sum += h;
  return finish_estimate("Exact", hit_sum, total, std::nullopt);
}

DensityEstimate mc_density(const SphereSpec& spec, const Predicate& predicate,
                           unsigned long long trials, unsigned long long master_seed,
                           int workers) {
  if (trials < 1) throw DomainError("mc_density needs trials >= 1");
  if (workers < 1) throw DomainError("workers must be >= 1");
  int n = spec.n;
  std::vector<unsigned long long> hits(workers, 0);

  auto run_trial = [&](unsigned long long t) -> bool {
    RandomStream rs(master_seed, t);
    for (int component = 0; component < spec.k; ++component) {
      TreeBits src = random_tree(n, rs);
      TreeBits tgt = random_tree(n, rs);
      if (spec.group == Group::T) {
        TElement e{src, tgt, rs.below_int(n + 1)};
        if (!predicate.t_fn(e)) return false;
      } else {
        std::vector<int> perm(n + 1);
        for (int i = 0; i <= n; ++i) perm[i] = i;
        for (int i = n; i >= 1; --i) {
          int j = rs.below_int(i + 1);
          std::swap(perm[i], perm[j]);
        }
        VElement e{src, tgt, std::move(perm)};
        if (!predicate.v_fn(e)) return false;
      }
    }
    return true;
  };

  auto run_worker = [&](int w) {
    unsigned long long lo =
        trials / workers * w + std::min<unsigned long long>(w, trials % workers);
    unsigned long long hi =
        trials / workers * (w + 1) + std::min<unsigned long long>(w + 1, trials % workers);
    unsigned long long local = 0;
    for (unsigned long long t = lo; t < hi; ++t) {
      if (run_trial(t)) ++local;
    }
    hits[w] = local;
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }
  unsigned long long hit_sum = 0;
  for (auto h : hits) hit_sum += h;
  return finish_estimate("MonteCarlo", hit_sum, trials, master_seed);
}

}  // namespace thompson
