// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "rcoh/cohomology.hpp"
#include "rcoh/random.hpp"

namespace {

rcoh::Matrix random_matrix(rcoh::Residue p, std::size_t n, std::uint64_t seed) {
  rcoh::Rng rng(seed);
  rcoh::Matrix m(p, n, n);
  for (auto& x : m.data()) x = rng.residue(p);
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  const auto m = random_matrix(101, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rcoh::linalg::rref_serial(m).rank);
}

void BM_RrefParallel(benchmark::State& state) {
  const auto m = random_matrix(101, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rcoh::linalg::rref_parallel(m).rank);
}

std::vector<rcoh::DimsCase> sweep_cases() {
  std::vector<rcoh::DimsCase> cases;
  for (rcoh::Residue p : {3u, 5u, 7u, 11u}) {
    cases.push_back({p, rcoh::Vector(p, 0)});
    for (std::size_t k = 0; k < p; ++k) cases.push_back({p, rcoh::PrimeField(p).unit(p, k)});
  }
  return cases;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cases = sweep_cases();
  for (auto _ : state) benchmark::DoNotOptimize(rcoh::compute_dims_rows_serial(cases).size());
}

void BM_SweepParallel(benchmark::State& state) {
  const auto cases = sweep_cases();
  for (auto _ : state) benchmark::DoNotOptimize(rcoh::compute_dims_rows(cases).size());
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
