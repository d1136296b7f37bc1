#include "bench_instances.hpp"

#include "polygrade/graded_algebra.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace polygrade;

namespace {

void BM_CheckGraded(benchmark::State& state) {
  const GradedAlgebra a = bench::sum_instance(static_cast<int>(state.range(0)));
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_graded(a, budget));
  }
  state.SetComplexityN(a.dim());
}

void BM_CheckStronglyGraded(benchmark::State& state) {
  const GradedAlgebra a = bench::sum_instance(static_cast<int>(state.range(0)));
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_strongly_graded(a, budget));
  }
  state.SetComplexityN(a.dim());
}

void BM_GrassmannGraded(benchmark::State& state) {
  const GradedAlgebra a = make_grassmann(static_cast<int>(state.range(0)));
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_graded(a, budget));
  }
}

void BM_HigherPowerGraded(benchmark::State& state) {
  const GradedAlgebra a = bench::sum_instance(static_cast<int>(state.range(0)));
  const long ell = state.range(1);
  const FiniteNaryGroup composed =
      compose_power(a.group(), ell, bench::wide_budget());
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_higher_power_graded(
        a, ell, composed, HigherPowerNesting::require_associative, budget));
  }
}

void BM_ComponentProductContained(benchmark::State& state) {
  const GradedAlgebra a = bench::sum_instance(static_cast<int>(state.range(0)));
  const std::vector<int> grades{0, 1, 1};
  const int target = a.group().apply(grades);
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        component_product_contained(a, grades, target, 1, budget));
  }
}

}  // namespace

BENCHMARK(BM_CheckGraded)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Complexity();
BENCHMARK(BM_CheckStronglyGraded)->Arg(2)->Arg(4)->Arg(8)->Complexity();
BENCHMARK(BM_GrassmannGraded)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_HigherPowerGraded)->Args({2, 2})->Args({2, 3})->Args({4, 2});
BENCHMARK(BM_ComponentProductContained)->Arg(2)->Arg(4)->Arg(8);
