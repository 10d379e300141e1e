#include <benchmark/benchmark.h>

#include <Eigen/Eigenvalues>

#include "nilzeta/ideal.hpp"
#include "nilzeta/spectral.hpp"
#include "nilzeta/uea.hpp"
#include "nilzeta/weyl.hpp"

using namespace nilzeta;

namespace {

AlgebraPtr spec_for(int which) {
  switch (which) {
    case 0: return Algebra::make({1, {2}, {{1}}});
    case 1: return Algebra::make({1, {3}, {{1}}});
    default: return Algebra::make({2, {1, 2}, {{1}, {2}}});
  }
}

// (sum of all variables)^d, normal ordered one factor at a time
void BM_NormalProductPower(benchmark::State& state) {
  const AlgebraPtr alg = spec_for(static_cast<int>(state.range(0)));
  UEAElement sum(alg);
  for (std::size_t v = 0; v < alg->num_variables(); ++v) sum += UEAElement::variable(alg, v);
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    UEAElement acc(alg, 1);
    for (unsigned k = 0; k < d; ++k) acc = normal_product(acc, sum);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_NormalProductPower)->Args({0, 4})->Args({1, 4})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_BuildSlice(benchmark::State& state) {
  const AlgebraPtr alg = spec_for(static_cast<int>(state.range(0)));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_slice(alg, d));
}
BENCHMARK(BM_BuildSlice)->Args({0, 4})->Args({1, 4})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_HermiteEigenSolve(benchmark::State& state) {
  const WeylOperator delta = delta1(spec_for(0));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const Eigen::MatrixXd m = hermite_matrix(delta, n).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    benchmark::DoNotOptimize(solver.eigenvalues().data());
  }
}
BENCHMARK(BM_HermiteEigenSolve)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

// the packaged benchmark_main archive carries LTO bytecode from another compiler
BENCHMARK_MAIN();
