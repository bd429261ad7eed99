#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qmt/laws.hpp"
#include "qmt/quantale.hpp"
#include "qmt/sampler.hpp"

namespace {

std::vector<qmt::Value> pool(const qmt::Quantale& q, int n) {
  qmt::Sampler s(q, 7);
  std::vector<qmt::Value> out;
  for (int i = 0; i < n; ++i) out.push_back(s.next());
  return out;
}

void BM_ddf_boxplus(benchmark::State& state) {
  const qmt::Quantale& q = qmt::ddf_quantale();
  auto vals = pool(q, 32);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        q.add(vals[i % vals.size()], vals[(i + 7) % vals.size()]));
    ++i;
  }
}
BENCHMARK(BM_ddf_boxplus);

void BM_ddf_way_above(benchmark::State& state) {
  const qmt::Quantale& q = qmt::ddf_quantale();
  auto vals = pool(q, 32);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        q.way_above(vals[i % vals.size()], vals[(i + 11) % vals.size()]));
    ++i;
  }
}
BENCHMARK(BM_ddf_way_above);

void BM_ddf_truncated_sub(benchmark::State& state) {
  const qmt::Quantale& q = qmt::ddf_quantale();
  auto vals = pool(q, 32);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        q.truncated_sub(vals[i % vals.size()], vals[(i + 13) % vals.size()]));
    ++i;
  }
}
BENCHMARK(BM_ddf_truncated_sub);

void BM_lattice_way_above_matrix(benchmark::State& state) {
  qmt::FiniteLattice lat = qmt::FiniteLattice::boolean(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(lat.way_above_bruteforce_matrix());
}
BENCHMARK(BM_lattice_way_above_matrix);

void BM_law_suite_extreal(benchmark::State& state) {
  const qmt::Quantale& q = qmt::extreal_quantale();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qmt::check_quantale_laws(q, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_law_suite_extreal)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
