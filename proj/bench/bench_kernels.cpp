#include <secular/determinant.hpp>
#include <secular/invariants.hpp>
#include <secular/oscillate.hpp>
#include <secular/reference.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace secular;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-9, 9);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(d(rng));
  return m;
}

PMatrix random_pencil(std::size_t n) {
  std::mt19937_64 rng(1858 + n);
  const QMatrix a = random_matrix(rng, n);
  const QMatrix b = random_matrix(rng, n);
  return Pencil(a, b, Orientation::kSAMinusB).characteristic_matrix();
}

ModalSolution string_solution(std::size_t n) {
  const auto model = build_model(ModelKind::kLoadedString, {{"n", Rat(static_cast<long>(n))}, {"a", Rat(1)}});
  QVector y(n), v(n);
  y[0] = 1;
  v[n - 1] = -1;
  return solve_modal(model, {y, v});
}

void BM_det_pencil_serial(benchmark::State& s) {
  const PMatrix p = random_pencil(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::det_pencil(p));
}

void BM_det_pencil_omp(benchmark::State& s) {
  const PMatrix p = random_pencil(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(det_pencil(p));
}

void BM_adjugate_serial(benchmark::State& s) {
  const PMatrix p = random_pencil(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::adjugate_pencil(p));
}

void BM_adjugate_omp(benchmark::State& s) {
  const PMatrix p = random_pencil(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(adjugate_pencil(p));
}

void BM_minor_chain_serial(benchmark::State& s) {
  const PMatrix p = random_pencil(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::minor_gcd_chain(p));
}

void BM_minor_chain_omp(benchmark::State& s) {
  const PMatrix p = random_pencil(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(minor_gcd_chain(p));
}

void BM_trajectory_serial(benchmark::State& s) {
  const auto sol = string_solution(8);
  const TimeGrid grid{100.0, static_cast<int>(s.range(0))};
  for (auto _ : s) benchmark::DoNotOptimize(reference::sample_trajectory(sol, grid));
}

void BM_trajectory_omp(benchmark::State& s) {
  const auto sol = string_solution(8);
  const TimeGrid grid{100.0, static_cast<int>(s.range(0))};
  for (auto _ : s) benchmark::DoNotOptimize(sample_trajectory(sol, grid));
}

}  // namespace

BENCHMARK(BM_det_pencil_serial)->DenseRange(3, 6);
BENCHMARK(BM_det_pencil_omp)->DenseRange(3, 6);
BENCHMARK(BM_adjugate_serial)->DenseRange(3, 6);
BENCHMARK(BM_adjugate_omp)->DenseRange(3, 6);
BENCHMARK(BM_minor_chain_serial)->DenseRange(3, 5);
BENCHMARK(BM_minor_chain_omp)->DenseRange(3, 5);
BENCHMARK(BM_trajectory_serial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_trajectory_omp)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
