#include <benchmark/benchmark.h>

#include <numeric>

#include "thompson/density.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/freeness.hpp"
#include "thompson/tree.hpp"

using namespace thompson;

namespace {

TElement random_t_element(int n, RandomStream& rs) {
  TreeBits s = random_tree(n, rs);
  TreeBits t = random_tree(n, rs);
  return make_t_element(s, t, rs.below_int(n + 1));
}

void bm_compose(benchmark::State& state) {
  RandomStream rs(1);
  int n = static_cast<int>(state.range(0));
  PLMap f = to_pl_map(random_t_element(n, rs));
  PLMap g = to_pl_map(random_t_element(n, rs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(f, g));
  }
}
BENCHMARK(bm_compose)->Arg(8)->Arg(32)->Arg(128);

void bm_fixed_points(benchmark::State& state) {
  RandomStream rs(2);
  int n = static_cast<int>(state.range(0));
  PLMap m = to_pl_map(random_t_element(n, rs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fixed_points(m));
  }
}
BENCHMARK(bm_fixed_points)->Arg(8)->Arg(32)->Arg(128);

void bm_random_tree(benchmark::State& state) {
  RandomStream rs(3);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_tree(n, rs));
  }
}
BENCHMARK(bm_random_tree)->Arg(16)->Arg(64)->Arg(256);

void bm_census(benchmark::State& state) {
  Predicate p = named_predicate("ns-family");
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_density({Group::T, 4, 1}, p));
  }
}
BENCHMARK(bm_census);

void bm_certificate(benchmark::State& state) {
  PingPongPair pair = sample_pingpong_pair(Group::T, 8, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_certificate(pair.u, pair.v, 8));
  }
}
BENCHMARK(bm_certificate);

}  // namespace

BENCHMARK_MAIN();
