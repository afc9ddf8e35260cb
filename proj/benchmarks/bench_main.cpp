#include <benchmark/benchmark.h>

#include "skewlab/catalog.hpp"
#include "skewlab/theorems.hpp"

using namespace skewlab;

namespace {

  Catalog const& catalog() {
    static Catalog const c;
    return c;
  }

  void ring_axioms_m2z2(benchmark::State& state) {
    auto const R = catalog().find("m2z2")->ring;
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_ring_axioms(*R));
    }
  }
  BENCHMARK(ring_axioms_m2z2);

  void endomorphisms_z8(benchmark::State& state) {
    auto const R = catalog().find("z8")->ring;
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_endomorphisms(R));
    }
  }
  BENCHMARK(endomorphisms_z8);

  void baer_m2z2(benchmark::State& state) {
    auto const I = catalog().resolve("m2z2", "id", "regular");
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_property(I, "baer", DegreeBound(2)));
    }
  }
  BENCHMARK(baer_m2z2);

  // range(0) is the degree bound
  void poly_pq_baer_z6(benchmark::State& state) {
    auto const I = catalog().resolve("z6", "id", "regular");
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_property(I, "poly:pq-baer", DegreeBound(static_cast<int>(state.range(0)))));
    }
  }
  BENCHMARK(poly_pq_baer_z6)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

  void series_pq_baer_z6(benchmark::State& state) {
    auto const I = catalog().resolve("z6", "id", "regular");
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_property(I, "series:pq-baer", DegreeBound(static_cast<int>(state.range(0)))));
    }
  }
  BENCHMARK(series_pq_baer_z6)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

  void skew_armendariz_f4(benchmark::State& state) {
    auto const I = catalog().resolve("f4", "frobenius", "regular");
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_skew_armendariz(I, DegreeBound(static_cast<int>(state.range(0)))));
    }
  }
  BENCHMARK(skew_armendariz_f4)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

  void suite_all(benchmark::State& state) {
    auto const instances = catalog().instances();
    for (auto _ : state) {
      for (auto const& I : instances) {
        benchmark::DoNotOptimize(run_suite(I, DegreeBound(2)));
      }
    }
  }
  BENCHMARK(suite_all)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
