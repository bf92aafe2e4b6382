#include <steffenlab/canonical.hpp>
#include <steffenlab/coloring.hpp>
#include <steffenlab/enumeration.hpp>
#include <steffenlab/generators.hpp>

#include <benchmark/benchmark.h>

using namespace steffenlab;

namespace {

Multigraph petersen()
{
    std::vector<EdgeSpec> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5, 1});
        e.push_back({i, i + 5, 1});
        e.push_back({5 + i, 5 + (i + 2) % 5, 1});
    }
    return Multigraph::build(10, e);
}

void BM_ChromaticIndexMuComplete(benchmark::State& state)
{
    const auto g = mu_complete(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_index(g).chi);
}
BENCHMARK(BM_ChromaticIndexMuComplete)->Args({5, 2})->Args({5, 3})->Args({7, 1})->Args({7, 2});

void BM_ChromaticIndexMuCycle(benchmark::State& state)
{
    const auto g = mu_cycle(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_index(g).chi);
}
BENCHMARK(BM_ChromaticIndexMuCycle)->Args({5, 3})->Args({7, 4})->Args({9, 6});

void BM_ChromaticIndexPetersen(benchmark::State& state)
{
    const auto g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_index(g).chi);
}
BENCHMARK(BM_ChromaticIndexPetersen);

void BM_CriticalityPetersen(benchmark::State& state)
{
    const auto g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(is_critical(g));
}
BENCHMARK(BM_CriticalityPetersen);

void BM_CanonicalForm(benchmark::State& state)
{
    SeededRng rng(1);
    std::vector<Multigraph> graphs;
    for (int i = 0; i < 64; ++i)
        graphs.push_back(random_multigraph(rng, static_cast<int>(state.range(0)), 3));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

void BM_CanonicalFormPetersen(benchmark::State& state)
{
    const auto g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormPetersen);

void BM_Density(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto g = mu_complete(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(density(g, n).gamma);
}
BENCHMARK(BM_Density)->Arg(9)->Arg(15)->Arg(21);

void BM_Enumerate(benchmark::State& state)
{
    EnumSpec spec;
    spec.nMax = static_cast<int>(state.range(0));
    spec.maxMu = 3;
    spec.maxEdgeCopies = 12;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_multigraphs(spec).size());
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
