#include <benchmark/benchmark.h>

#include "matoric/catalog.hpp"
#include "matoric/exchange.hpp"
#include "matoric/pipeline.hpp"

using namespace matoric;

static void BM_ToricGbU24(benchmark::State& state) {
  Matroid m = uniform(2, 4);
  IntegerMatrix d = bases_matrix(m);
  MonomialOrder order = canonical_base_order(m.basis_count());
  for (auto _ : state) {
    BinomialSet gb = toric_gb(d, order);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_ToricGbU24);

static void BM_ToricGbU25(benchmark::State& state) {
  Matroid m = uniform(2, 5);
  IntegerMatrix d = bases_matrix(m);
  MonomialOrder order = canonical_base_order(m.basis_count());
  for (auto _ : state) {
    BinomialSet gb = toric_gb(d, order);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_ToricGbU25);

static void BM_ToricGbU36(benchmark::State& state) {
  Matroid m = uniform(3, 6);
  IntegerMatrix d = bases_matrix(m);
  MonomialOrder order = canonical_base_order(m.basis_count());
  for (auto _ : state) {
    BinomialSet gb = toric_gb(d, order);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_ToricGbU36)->Unit(benchmark::kMillisecond);

static void BM_SeriesExtensionOracleU25(benchmark::State& state) {
  AnchoredMatroid am = anchor(uniform(2, 5), 5);
  IntegerMatrix tilde = series_ext_matrix(am);
  MonomialOrder order = series_ext_order(canonical_base_order(am.basis_count()), am.gamma(),
                                         am.basis_count());
  for (auto _ : state) {
    BinomialSet gb = toric_gb(tilde, order);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_SeriesExtensionOracleU25)->Unit(benchmark::kMillisecond);

static void BM_LiftIsGroebnerU36(benchmark::State& state) {
  AnchoredMatroid am = anchor(uniform(3, 6), 6);
  MonomialOrder base = canonical_base_order(am.basis_count());
  BinomialSet f = toric_gb(anchored_bases_matrix(am), base);
  BinomialSet lifted = lift_series_extension(f, am.gamma(), am.basis_count());
  MonomialOrder order = series_ext_order(base, am.gamma(), am.basis_count());
  for (auto _ : state) {
    bool ok = is_groebner(lifted, order);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_LiftIsGroebnerU36)->Unit(benchmark::kMillisecond);

static void BM_ExchangeSetMK4(benchmark::State& state) {
  Matroid m = named(NamedMatroid::MK4);
  for (auto _ : state) {
    ExchangeSet ex = symmetric_exchange_set(m);
    benchmark::DoNotOptimize(ex);
  }
}
BENCHMARK(BM_ExchangeSetMK4);

static void BM_SeriesConnectionPipelineU23(benchmark::State& state) {
  Matroid m = uniform(2, 3);
  for (auto _ : state) {
    ConstructionReport r = series_connection_pipeline(m, 3, m, 3, true);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SeriesConnectionPipelineU23)->Unit(benchmark::kMillisecond);
