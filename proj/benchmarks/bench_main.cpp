#include <benchmark/benchmark.h>

#include "packtree/construct.hpp"
#include "packtree/explorer.hpp"
#include "packtree/families.hpp"
#include "packtree/packing_bound.hpp"
#include "packtree/solver.hpp"

using namespace packtree;

namespace {

void BM_chromatic_path(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    Tree t = Tree::from_edges(e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_packing_number(t).chi_rho);
    }
}
BENCHMARK(BM_chromatic_path)->Arg(16)->Arg(32)->Arg(64);

void BM_max_i_packing(benchmark::State& state) {
    FamilyMember m = make_Tlk(4, 4);
    const Tree& t = m.ct.tree();
    for (auto _ : state) {
        for (int i = 1; i <= 4; ++i) benchmark::DoNotOptimize(max_i_packing(t, i));
    }
}
BENCHMARK(BM_max_i_packing);

void BM_enumerate_p10(benchmark::State& state) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < 10; ++v) e.emplace_back(v - 1, v);
    Tree t = Tree::from_edges(e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_k_packings(t, 3).size());
    }
}
BENCHMARK(BM_enumerate_p10);

void BM_unique_Tk(benchmark::State& state) {
    FamilyMember m = make_Tk(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_uniquely_k_packable(m.ct.tree(), 3).kind);
    }
}
BENCHMARK(BM_unique_Tk)->Arg(3)->Arg(6);

void BM_decompose_Tk(benchmark::State& state) {
    FamilyMember m = make_Tk(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(m.ct.tree()).has_value());
    }
}
BENCHMARK(BM_decompose_Tk)->Arg(3)->Arg(5);

void BM_gen_trees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_trees(n).size());
    }
}
BENCHMARK(BM_gen_trees)->Arg(10)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
