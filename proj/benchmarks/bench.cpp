// Microbenchmarks for the hot paths: closure enumeration, order
// histograms, spectrum combinators and the closed-form families.

#include <benchmark/benchmark.h>

#include "ordspec/expr.hpp"
#include "ordspec/families.hpp"
#include "ordspec/group_ops.hpp"

using namespace ordspec;

namespace {

const ElementSet& s7() {
    static const ElementSet g =
        evaluate_concrete(parse_expr("S(7)"), EvalConfig{});
    return g;
}

void BM_ClosureS7(benchmark::State& state) {
    std::vector<Permutation> gens = s7().generators();
    for (auto _ : state) {
        ElementSet g = ElementSet::generate(gens);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_ClosureS7);

void BM_ClosurePSL2_27(benchmark::State& state) {
    const FamilySpec spec = FamilySpec::make(Family::PSL2, 27);
    for (auto _ : state) {
        ElementSet g = family_group(spec);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_ClosurePSL2_27);

void BM_SpectrumOfS7(benchmark::State& state) {
    const ElementSet& g = s7();
    for (auto _ : state) {
        OrderSpectrum s = spectrum_of(g);
        benchmark::DoNotOptimize(s.group_order());
    }
}
BENCHMARK(BM_SpectrumOfS7);

void BM_ProductConvolution(benchmark::State& state) {
    const OrderSpectrum a = sn_spectrum(30);
    const OrderSpectrum b = an_spectrum(30);
    for (auto _ : state) {
        OrderSpectrum s = direct_product(a, b);
        benchmark::DoNotOptimize(s.group_order());
    }
}
BENCHMARK(BM_ProductConvolution);

void BM_WreathTower(benchmark::State& state) {
    for (auto _ : state) {
        OrderSpectrum s = cyclic_spectrum(2);
        for (int i = 0; i < 5; ++i)
            s = wreath_c2(s);
        benchmark::DoNotOptimize(s.group_order());
    }
}
BENCHMARK(BM_WreathTower);

void BM_Psl2Formula(benchmark::State& state) {
    for (auto _ : state) {
        OrderSpectrum s = psl2_spectrum(9973);
        benchmark::DoNotOptimize(s.group_order());
    }
}
BENCHMARK(BM_Psl2Formula);

void BM_SnPartitions(benchmark::State& state) {
    for (auto _ : state) {
        OrderSpectrum s = sn_spectrum(40);
        benchmark::DoNotOptimize(s.group_order());
    }
}
BENCHMARK(BM_SnPartitions);

} // namespace

BENCHMARK_MAIN();
