#include <benchmark/benchmark.h>

#include <random>

#include "perckit/canonical.hpp"
#include "perckit/conditions.hpp"
#include "perckit/enumerate.hpp"
#include "perckit/families.hpp"
#include "perckit/graph.hpp"
#include "perckit/percolation.hpp"

namespace {

perckit::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    perckit::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void BM_closure(benchmark::State& state) {
    const int n = int(state.range(0));
    perckit::Graph g = random_graph(n, 0.1, 7);
    perckit::VertexSet seed(n);
    for (int v = 0; v < n; v += 7) seed.insert(v);
    for (auto _ : state) benchmark::DoNotOptimize(perckit::closure(g, seed, 2));
}
BENCHMARK(BM_closure)->Arg(64)->Arg(256)->Arg(1024);

void BM_min_contagious_cycle(benchmark::State& state) {
    perckit::Graph g = perckit::make_cycle(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(perckit::min_contagious(g, 2).m);
}
BENCHMARK(BM_min_contagious_cycle)->Arg(12)->Arg(14)->Arg(16);

void BM_min_contagious_random(benchmark::State& state) {
    perckit::Graph g = random_graph(int(state.range(0)), 0.3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(perckit::min_contagious(g, 2).m);
}
BENCHMARK(BM_min_contagious_random)->Arg(16)->Arg(20);

void BM_canonical_form(benchmark::State& state) {
    perckit::Graph g = random_graph(int(state.range(0)), 0.5, 13);
    for (auto _ : state) benchmark::DoNotOptimize(perckit::canonical_form(g));
}
BENCHMARK(BM_canonical_form)->Arg(8)->Arg(10)->Arg(12);

void BM_enumerate(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        int count = 0;
        perckit::enumerate_graphs(n, [&](const perckit::Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate)->Arg(6)->Arg(7);

void BM_classify_family(benchmark::State& state) {
    perckit::Graph g = perckit::make_g2(8, 9);
    for (auto _ : state) benchmark::DoNotOptimize(perckit::classify_family(g).kind);
}
BENCHMARK(BM_classify_family);

void BM_sigma2(benchmark::State& state) {
    perckit::Graph g = random_graph(int(state.range(0)), 0.4, 17);
    for (auto _ : state) benchmark::DoNotOptimize(perckit::sigma2(g).value);
}
BENCHMARK(BM_sigma2)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
