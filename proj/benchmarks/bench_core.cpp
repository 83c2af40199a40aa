#include <benchmark/benchmark.h>

#include "padiff/catalog.hpp"
#include "padiff/ramify.hpp"
#include "padiff/slopes.hpp"

using namespace padiff;

static void BM_GaussEnvelope(benchmark::State& state) {
  LaurentElement f = catalog_adjoint_bessel2().op.coeff(1);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_envelope(f));
}
BENCHMARK(BM_GaussEnvelope);

static void BM_PolygonAt(benchmark::State& state) {
  TwistedOperator ell = catalog_bessel(state.range(0), 2).op;
  Rational s = rat(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(polygon_at(ell, s));
}
BENCHMARK(BM_PolygonAt)->Arg(2)->Arg(5);

static void BM_ParametricPolygon(benchmark::State& state) {
  TwistedOperator ell = catalog_bessel(state.range(0), 2).op;
  for (auto _ : state) benchmark::DoNotOptimize(parametric_polygon(ell));
}
BENCHMARK(BM_ParametricPolygon)->Arg(2)->Arg(5);

static void BM_RadiiProfile(benchmark::State& state) {
  TwistedOperator ell = catalog_adjoint_bessel2().op;
  for (auto _ : state) benchmark::DoNotOptimize(radii_profile(ell));
}
BENCHMARK(BM_RadiiProfile);

static void BM_OreProduct(benchmark::State& state) {
  TwistedOperator ell = catalog_adjoint_bessel2().op;
  for (auto _ : state) benchmark::DoNotOptimize(tmul(ell, ell));
}
BENCHMARK(BM_OreProduct);

static void BM_CyclicForm(benchmark::State& state) {
  SystemMatrix system = companion_system(catalog_bessel(3, 2).op);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_form(system, 0));
}
BENCHMARK(BM_CyclicForm);

static void BM_CharacterTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(character_table_semidirect(4, 6));
}
BENCHMARK(BM_CharacterTable);

static void BM_Sl2F3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl2f3());
}
BENCHMARK(BM_Sl2F3);

BENCHMARK_MAIN();
