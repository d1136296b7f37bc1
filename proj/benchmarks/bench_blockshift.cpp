#include "polygrade/blockshift.hpp"
#include "polygrade/fixtures.hpp"
#include "polygrade/zpoly.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

using namespace polygrade;

namespace {

// Arity-n polynomial with `count` admissible terms ell*(n-1)+1, ell = 1..count.
MatrixPolynomial dense_polynomial(int arity, int count) {
  std::map<long, Rat> terms;
  for (int ell = 1; ell <= count; ++ell) {
    terms.emplace(monomial_degree(ell, arity),
                  ell % 2 == 0 ? Rat(-ell, 3) : Rat(ell, 3));
  }
  return MatrixPolynomial::make(arity, Rat(1, 2), std::move(terms));
}

void BM_PolynomialProduct(benchmark::State& state) {
  const int arity = static_cast<int>(state.range(0));
  const MatrixPolynomial p = dense_polynomial(arity, static_cast<int>(state.range(1)));
  const std::vector<MatrixPolynomial> factors(static_cast<std::size_t>(arity), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polynomial_nary_product(factors));
  }
}

void BM_PolynomialRealization(benchmark::State& state) {
  const MatrixPolynomial p =
      dense_polynomial(4, static_cast<int>(state.range(0)));
  const Rat x(3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polynomial_realization(p, x));
  }
}

void BM_MonomialRealization(benchmark::State& state) {
  const BlockShiftMonomial mono{4, Rat(3360), state.range(0)};
  const Rat x(3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_realization(mono, x));
  }
}

void BM_PolyadicIdentityCheck(benchmark::State& state) {
  const int arity = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polyadic_identity_check(arity, default_probe_values()));
  }
}

void BM_ExponentGrading(benchmark::State& state) {
  const MatrixPolynomial p =
      dense_polynomial(4, static_cast<int>(state.range(0)));
  const PolyadicIntegerRing ring = grading_ring_for_polynomials(4, 7);
  const EvalBudget budget{1'000'000'000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_polynomial_grading(p, ring, budget));
  }
}

}  // namespace

BENCHMARK(BM_PolynomialProduct)->Args({3, 4})->Args({3, 8})->Args({4, 4})->Args({4, 6});
BENCHMARK(BM_PolynomialRealization)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_MonomialRealization)->Arg(13)->Arg(52)->Arg(208);
BENCHMARK(BM_PolyadicIdentityCheck)->Arg(2)->Arg(3)->Arg(5)->Arg(9);
BENCHMARK(BM_ExponentGrading)->Arg(2)->Arg(4)->Arg(6);
