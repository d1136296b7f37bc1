#include "bench_instances.hpp"

#include "polygrade/nary_group.hpp"

#include <benchmark/benchmark.h>

using namespace polygrade;

namespace {

void BM_CayleyTable(benchmark::State& state) {
  const auto g = FiniteNaryGroup::unchecked(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
      AffineLaw{1});
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.cayley_table(budget));
  }
  state.SetComplexityN(g.carrier_size());
}

void BM_TotalAssociativity(benchmark::State& state) {
  const auto g = FiniteNaryGroup::unchecked(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
      AffineLaw{1});
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_totally_associative(g, budget));
  }
}

void BM_ValidateGroup(benchmark::State& state) {
  const auto g = FiniteNaryGroup::unchecked(
      static_cast<int>(state.range(0)), 3, AffineLaw{1});
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_group(g, budget));
  }
}

void BM_ComposePower(benchmark::State& state) {
  const auto g = FiniteNaryGroup::unchecked(2, 3, AffineLaw{1});
  const EvalBudget budget = bench::wide_budget();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_power(g, state.range(0), budget));
  }
}

}  // namespace

BENCHMARK(BM_CayleyTable)->Args({4, 3})->Args({8, 3})->Args({16, 3})->Args({6, 4});
BENCHMARK(BM_TotalAssociativity)->Args({2, 3})->Args({3, 3})->Args({4, 3})->Args({2, 5});
BENCHMARK(BM_ValidateGroup)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_ComposePower)->Arg(2)->Arg(3)->Arg(4)->Arg(5);
