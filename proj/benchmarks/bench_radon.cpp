#include <benchmark/benchmark.h>

#include <cstdint>

#include "radon/arithmetic.hpp"
#include "radon/expsums.hpp"
#include "radon/geometry.hpp"
#include "radon/multiindex.hpp"
#include "radon/operators.hpp"
#include "radon/polynomial.hpp"
#include "radon/rng.hpp"

namespace {

radon::LatticeFunction random_function(int dim, int support, std::uint64_t seed) {
  radon::CounterRng rng(seed);
  radon::LatticeFunction f(dim);
  for (int t = 0; t < support; ++t) {
    radon::Point p(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) p[static_cast<std::size_t>(c)] = rng.next_int(-32, 32);
    f.set(p, rng.next_complex(1.0));
  }
  return f;
}

void BM_weyl_sum(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  radon::WeylPhase ph = radon::WeylPhase::zero(1, 2);
  ph.set({2}, 0.514);
  auto window = radon::ConvexBody::window(1, N);
  for (auto _ : state) benchmark::DoNotOptimize(radon::weyl_sum(ph, window));
  state.SetItemsProcessed(state.iterations() * N);
}

void BM_gauss_sum(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  radon::MultiIndexSet gamma = radon::build_gamma(1, 3);
  radon::RationalPoint a({1, 2, q - 1}, q);
  for (auto _ : state) benchmark::DoNotOptimize(radon::gauss_sum(a, gamma));
  state.SetItemsProcessed(state.iterations() * q);
}

void BM_apply_average(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  radon::PolynomialMapping P = radon::PolynomialMapping::one_dim({{1}, {0, 1}});
  radon::LatticeFunction f = random_function(1, 64, 11);
  for (auto _ : state) benchmark::DoNotOptimize(radon::apply_average(f, P, N));
  state.SetItemsProcessed(state.iterations() * N);
}

void BM_multiplier_m(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  radon::MultiIndexSet gamma = radon::build_gamma(1, 2);
  radon::TorusPoint xi(std::vector<double>{0.21, 0.37});
  for (auto _ : state) benchmark::DoNotOptimize(radon::multiplier_m(xi, N, gamma));
}

void BM_phi(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  radon::MultiIndexSet gamma = radon::build_gamma(1, 2);
  std::vector<double> xi{0.21 / static_cast<double>(N), 0.05};
  for (auto _ : state) benchmark::DoNotOptimize(radon::phi(xi, N, gamma));
}

void BM_denominator_set(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  for (auto _ : state) {
    auto S = radon::build_denominator_set(N, 1.0);
    benchmark::DoNotOptimize(S.all_members().size());
  }
}

void BM_lattice_disk(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  auto b = radon::ConvexBody::ball({0.0, 0.0}, r);
  for (auto _ : state) benchmark::DoNotOptimize(radon::lattice_points(b, false).count);
}

}  // namespace

BENCHMARK(BM_weyl_sum)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_gauss_sum)->Arg(97)->Arg(997);
BENCHMARK(BM_apply_average)->Arg(64)->Arg(256);
BENCHMARK(BM_multiplier_m)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK(BM_phi)->Arg(1 << 10);
BENCHMARK(BM_denominator_set)->Arg(8)->Arg(12);
BENCHMARK(BM_lattice_disk)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
