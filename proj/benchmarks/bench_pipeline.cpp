#include <benchmark/benchmark.h>

#include "ale/equations.hpp"

using namespace ale;

namespace {

const ExpansionTerms& shared_terms() {
  static const ExpansionTerms t = build_expansion_terms();
  return t;
}

void BM_PolyMultiply(benchmark::State& state) {
  // two dense quartics in the coordinates
  Poly a, b;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      a += Poly(Monomial::var(SymbolId::geom(i)).times(Monomial::var(SymbolId::geom(j))),
                Rational(i + j));
      b += Poly(Monomial::var(SymbolId::geom(i), 2).times(Monomial::var(SymbolId::geom(j))),
                Rational(i - 5 * j));
    }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply);

void BM_RadialDerivative(benchmark::State& state) {
  RadialRational f = shared_terms().h.at(1, 2);
  for (auto _ : state)
    for (int k = 1; k <= 4; ++k) benchmark::DoNotOptimize(f.derivative(k));
}
BENCHMARK(BM_RadialDerivative);

void BM_BuildAndValidateMetric(benchmark::State& state) {
  for (auto _ : state) {
    Tensor2 h = build_h_plus(SymParam3::zeta_symbols()) + build_h_minus(SymParam3::xi_symbols());
    benchmark::DoNotOptimize(validate_h(h).ok());
  }
}
BENCHMARK(BM_BuildAndValidateMetric);

void BM_ExpansionTerms(benchmark::State& state) {
  Tensor2 h = build_h_plus(SymParam3::zeta_symbols()) + build_h_minus(SymParam3::xi_symbols());
  for (auto _ : state) benchmark::DoNotOptimize(build_expansion_terms(h));
}
BENCHMARK(BM_ExpansionTerms);

void BM_PairingIntegral(benchmark::State& state) {
  const ExpansionTerms& t = shared_terms();
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_pairing_integral(t, 1, 2, 3, 4));
}
BENCHMARK(BM_PairingIntegral);

void BM_AssembleDifferential(benchmark::State& state) {
  const ExpansionTerms& t = shared_terms();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_differential(t));
}
BENCHMARK(BM_AssembleDifferential);

void BM_SolveDifferential(benchmark::State& state) {
  LinearSystem sys;
  sys.families = {Family::Differential};
  sys.equations = assemble_differential(shared_terms());
  for (auto _ : state) benchmark::DoNotOptimize(solve_system(sys));
}
BENCHMARK(BM_SolveDifferential);

}  // namespace

BENCHMARK_MAIN();
