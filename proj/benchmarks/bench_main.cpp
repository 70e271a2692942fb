#include <benchmark/benchmark.h>

#include "pvi/calculus.hpp"
#include "pvi/catalog.hpp"
#include "pvi/okamoto.hpp"
#include "pvi/residual.hpp"

namespace {

using namespace pvi;

void BM_PolyMul(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("boalch-39");
    const Poly& a = e.t().num();
    for (auto _ : state) {
        Poly p = mul(a, a, *e.tower());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PolyMul);

void BM_ElementInverse(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("boalch-39");
    for (auto _ : state) {
        TowerElement x = e.y().inverse();
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_ElementInverse);

void BM_Derivative(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("boalch-44");
    for (auto _ : state) {
        TowerElement d = derivative(e.t());
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Derivative);

void BM_OkamotoType39(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("boalch-39");
    NuTuple nu{rat(-1, 3), rat(-1, 3), rat(-4, 5), rat(4, 5)};
    for (auto _ : state) {
        ParamSolution out = okamoto(e.solution, nu);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_OkamotoType39);

void BM_ResidualExactHitchin(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("hitchin-dihedral");
    for (auto _ : state) {
        TowerElement r = residual(e.solution);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResidualExactHitchin);

void BM_ResidualExactType39(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("boalch-39");
    for (auto _ : state) {
        TowerElement r = residual(e.solution);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResidualExactType39);

void BM_ResidualNumeric52(benchmark::State& state) {
    const CatalogEntry& e = catalog_entry("boalch-52");
    for (auto _ : state) {
        mpf_class m = residual_numeric(e.solution, 2, 60);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_ResidualNumeric52);

}  // namespace

BENCHMARK_MAIN();
