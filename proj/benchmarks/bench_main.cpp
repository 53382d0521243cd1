#include <benchmark/benchmark.h>

#include <random>

#include "sasakit/cy_structure.hpp"
#include "sasakit/families.hpp"
#include "sasakit/lattice.hpp"
#include "sasakit/potentials.hpp"
#include "sasakit/reeb_volume.hpp"

namespace {

using namespace sasakit;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, n + 2, 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(10);

void BM_ValidateMain4(benchmark::State& state) {
  const auto normals = height1_normals(main4_even_vertices(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(validate_diagram(normals));
  state.SetLabel(std::to_string(normals.size()) + " normals");
}
BENCHMARK(BM_ValidateMain4)->Arg(1)->Arg(4)->Arg(8)->Arg(14);

void BM_IsGood(benchmark::State& state) {
  const auto d = main4_even(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_good(d));
}
BENCHMARK(BM_IsGood)->Arg(1)->Arg(4)->Arg(8)->Arg(14);

void BM_MinimizeVolume(benchmark::State& state) {
  const auto d = main4_even(state.range(0), 2);
  const auto cy = *compute_gamma(d);
  const auto method = state.range(1) == 0 ? Optimizer::kNewton : Optimizer::kProjectedGradient;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_volume(d, cy, method));
}
BENCHMARK(BM_MinimizeVolume)->Args({1, 0})->Args({4, 0})->Args({8, 0})->Args({1, 1})->Args({4, 1});

void BM_EvalCanonical(benchmark::State& state) {
  const auto d = main4_even(state.range(0), 2);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(3);
  for (const auto& r : edge_rays_3d(d)) y += to_eigen(r);
  for (auto _ : state) benchmark::DoNotOptimize(eval_canonical(d, y));
}
BENCHMARK(BM_EvalCanonical)->Arg(1)->Arg(8);

void BM_LegendreInverse(benchmark::State& state) {
  const auto d = main4_odd(2, 1);
  const auto g = SymplecticPotential::canonical(d);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(3);
  for (const auto& r : edge_rays_3d(d)) y += to_eigen(r);
  const auto x = legendre(g, y).x;
  const Eigen::VectorXd guess = 1.3 * y;
  for (auto _ : state) benchmark::DoNotOptimize(legendre_inverse(g, x, guess));
}
BENCHMARK(BM_LegendreInverse);

}  // namespace
BENCHMARK_MAIN();
