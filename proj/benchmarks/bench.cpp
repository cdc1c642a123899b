#include <benchmark/benchmark.h>

#include <random>

#include "chevk1/reduction.hpp"

using namespace chevk1;

static void BM_DiagramBuildE7(benchmark::State &state) {
    for (auto _ : state) {
        auto d = WeightDiagram::build(RootSystem::build("E7"), 7);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DiagramBuildE7);

static void BM_RealizeWordE7(benchmark::State &state) {
    auto d = WeightDiagram::build(RootSystem::build("E7"), 7);
    auto ring = RingDescriptor::residue(360);
    std::mt19937_64 rng(7);
    const auto &roots = d->system()->roots();
    GeneratorWord w{d->label(), {}};
    for (int i = 0; i < 20; ++i)
        w.letters.push_back({LetterKind::X, roots[rng() % roots.size()],
                             RingElement::from_int(ring, Int(rng() % 360)),
                             {}});
    for (auto _ : state) {
        auto g = realize(d, ring, w);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_RealizeWordE7);

static void BM_ReduceE6_Z360(benchmark::State &state) {
    auto d = WeightDiagram::build(RootSystem::build("E6"), 1);
    auto ring = RingDescriptor::residue(360);
    std::mt19937_64 rng(11);
    std::vector<std::vector<RingElement>> inputs;
    while (inputs.size() < 16) {
        std::vector<RingElement> v;
        for (std::size_t i = 0; i < d->size(); ++i)
            v.push_back(RingElement::from_int(ring, Int(rng() % 360)));
        if (unimodular_certificate(v))
            inputs.push_back(std::move(v));
    }
    std::size_t k = 0;
    for (auto _ : state) {
        UnimodularVector v(d, inputs[k++ % inputs.size()]);
        auto w = reduce_E6(v);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_ReduceE6_Z360);

static void BM_MatsumotoE6(benchmark::State &state) {
    auto d = WeightDiagram::build(RootSystem::build("E6"), 1);
    auto ring = RingDescriptor::residue(5);
    std::mt19937_64 rng(13);
    const auto &roots = d->system()->roots();
    GroupElement g;
    do {
        GeneratorWord w{d->label(), {}};
        for (int i = 0; i < 20; ++i)
            w.letters.push_back({LetterKind::X, roots[rng() % roots.size()],
                                 RingElement::from_int(ring, Int(rng() % 5)),
                                 {}});
        g = realize(d, ring, w);
    } while (!g.at(0, 0).is_unit());
    for (auto _ : state) {
        auto split = chevalley_matsumoto(g, 1);
        benchmark::DoNotOptimize(split);
    }
}
BENCHMARK(BM_MatsumotoE6);

BENCHMARK_MAIN();
