#include <benchmark/benchmark.h>

#include "sethom/cases.hpp"
#include "sethom/census.hpp"
#include "sethom/homtest.hpp"
#include "sethom/hypergraph.hpp"
#include "sethom/reconstruct.hpp"
#include "sethom/trees.hpp"

using namespace sethom;

namespace {

KHypergraph fourteen_edge_example() {
    KHypergraph h(7, 3);
    for (int i = 0; i < 7; ++i) {
        h.add_edge({i, (i + 1) % 7, (i + 3) % 7});
        h.add_edge({i, (i + 2) % 7, (i + 3) % 7});
    }
    return h;
}

void bm_realization_table(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = realization_table(k);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(bm_realization_table)->Arg(3)->Arg(4)->Arg(5);

void bm_solve_cover(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    std::set<Label> required;
    for (int a = 1; a <= k + 1; ++a)
        for (int b = 1; b <= k + 1; ++b)
            if (a != b && std::abs(a - b) >= 2) required.insert(Label::s(a, b));
    for (auto _ : state) {
        auto solutions = solve_cover(k, required);
        benchmark::DoNotOptimize(solutions);
    }
}
BENCHMARK(bm_solve_cover)->Arg(3)->Arg(4);

void bm_derive_edges_m3(benchmark::State& state) {
    const int leaves = static_cast<int>(state.range(0));
    LeafTree t = random_rooted_fragment(leaves, 2, 7);
    for (auto _ : state) {
        auto h = derive_edges_m3(t);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bm_derive_edges_m3)->Arg(8)->Arg(16)->Arg(32);

void bm_derive_edges_n3(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    CircleConfig cfg = build_circle_config(points, 997, 7);
    for (auto _ : state) {
        auto h = derive_edges_n3(cfg);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bm_derive_edges_n3)->Arg(8)->Arg(16)->Arg(32);

void bm_derive_edges_m6(benchmark::State& state) {
    const int leaves = static_cast<int>(state.range(0));
    UnrootedLeafTree t = random_unrooted_fragment(leaves, 3, 7);
    for (auto _ : state) {
        auto h = derive_edges_m6(t);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bm_derive_edges_m6)->Arg(8)->Arg(10)->Arg(12);

void bm_automorphism_group(benchmark::State& state) {
    StructuredSet m(fourteen_edge_example());
    for (auto _ : state) {
        auto g = automorphism_group(m, {RelTag::Edge});
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(bm_automorphism_group)->Unit(benchmark::kMillisecond);

void bm_homogeneity_report(benchmark::State& state) {
    KHypergraph m = fourteen_edge_example();
    for (auto _ : state) {
        auto report = homogeneity_report(m);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_homogeneity_report)->Unit(benchmark::kMillisecond);

void bm_canonical_form(benchmark::State& state) {
    KHypergraph m = fourteen_edge_example();
    for (auto _ : state) {
        auto canon = canonical_form(m);
        benchmark::DoNotOptimize(canon);
    }
}
BENCHMARK(bm_canonical_form)->Unit(benchmark::kMillisecond);

void bm_recover_order(benchmark::State& state) {
    ClosedTree closed = witness_closure(random_rooted_fragment(12, 2, 7));
    std::vector<int> core;
    for (int original : {0, 2, 4, 6, 8, 11}) core.push_back(closed.original_image[original]);
    AmbientCore ac = make_ambient_core(Family::M3, closed.tree, core);
    for (auto _ : state) {
        auto order = recover_order_m3(ac);
        benchmark::DoNotOptimize(order);
    }
}
BENCHMARK(bm_recover_order);

void bm_recover_d(benchmark::State& state) {
    AmbientCore ac = make_ambient_core(Family::N4, random_unrooted_fragment(14, 4, 7),
                                       {1, 3, 5, 7, 9, 13});
    for (auto _ : state) {
        auto d = recover_d_n4(ac);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_recover_d);

void bm_key_lemma_trial(benchmark::State& state) {
    for (auto _ : state) {
        auto report = key_lemma_trial(Family::M4, {4, 5}, 10, 7);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_key_lemma_trial)->Unit(benchmark::kMillisecond);

void bm_census(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto entries = census_orbit_unions(degree);
        benchmark::DoNotOptimize(entries);
    }
}
BENCHMARK(bm_census)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
