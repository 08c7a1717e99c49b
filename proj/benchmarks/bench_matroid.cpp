#include <benchmark/benchmark.h>

#include "matoric/catalog.hpp"

using namespace matoric;

static void BM_ValidateMK4(benchmark::State& state) {
  Matroid m = named(NamedMatroid::MK4);
  std::vector<Basis> bases = m.bases();
  for (auto _ : state) {
    Matroid v = Matroid::from_bases(6, bases);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ValidateMK4);

static void BM_ValidateU37DirectSumU23(benchmark::State& state) {
  Matroid s = direct_sum(uniform(3, 7), uniform(2, 3));
  std::vector<Basis> bases = s.bases();
  for (auto _ : state) {
    Matroid v = Matroid::from_bases(s.ground_size(), bases);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ValidateU37DirectSumU23)->Unit(benchmark::kMillisecond);

static void BM_SpanningTreesK4(benchmark::State& state) {
  for (auto _ : state) {
    Matroid m = graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_SpanningTreesK4);

static void BM_HasMinorMK4InU37(benchmark::State& state) {
  Matroid u37 = uniform(3, 7);
  Matroid mk4 = named(NamedMatroid::MK4);
  for (auto _ : state) {
    bool has = has_minor(u37, mk4);
    benchmark::DoNotOptimize(has);
  }
}
BENCHMARK(BM_HasMinorMK4InU37)->Unit(benchmark::kMillisecond);

static void BM_ExcludedMinorFreeU25PlusU23(benchmark::State& state) {
  Matroid m = direct_sum(uniform(2, 5), uniform(2, 3));
  for (auto _ : state) {
    bool free = excluded_minor_free(m);
    benchmark::DoNotOptimize(free);
  }
}
BENCHMARK(BM_ExcludedMinorFreeU25PlusU23)->Unit(benchmark::kMillisecond);

static void BM_IsNConnectedMK4(benchmark::State& state) {
  Matroid m = named(NamedMatroid::MK4);
  for (auto _ : state) {
    bool c = is_n_connected(m, 3);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_IsNConnectedMK4);
