// Serial vs OpenMP exact elimination on systems drawn from real builds.
#include <benchmark/benchmark.h>

#include "truncat/catobjects.hpp"

using namespace truncat;

namespace {

// intertwiner equations of End(P(λ,0)(Γ)): a representative exact system
std::vector<SVec> homSystem(int weightCoord, int depth) {
    const RootSystem& rs = RootSystem::get(AlgebraType::A1);
    TruncationSpec g;
    g.a = 0;
    g.b = depth;
    Weight la(std::vector<int>{weightCoord});
    ExplicitModule P = buildObject(rs, FamilyTag{Family::Proj, la, 0, g}).mod;

    std::map<Label, std::vector<int>> byLabel;
    for (int i = 0; i < P.dim(); ++i) byLabel[P.basis[i]].push_back(i);
    std::map<std::pair<int, int>, int> unknownId;
    int nu = 0;
    for (const auto& [l, idxs] : byLabel)
        for (int i : idxs)
            for (int j : idxs) unknownId[{j, i}] = nu++;
    std::vector<SVec> equations;
    for (int z = 0; z < rs.dimG; ++z)
        for (const SMat* A : {&P.act0[z], &P.act1[z]})
            for (int i = 0; i < P.dim(); ++i) {
                std::map<int, SVec> rowEq;
                for (const auto& [k, c] : A->col[i].e)
                    for (int n : byLabel[P.basis[k]])
                        svAxpy(rowEq[n], c, SVec::unit(unknownId.at({n, k})));
                for (int m : byLabel[P.basis[i]]) {
                    int u = unknownId.at({m, i});
                    for (const auto& [n, c] : A->col[m].e) svAxpy(rowEq[n], -c, SVec::unit(u));
                }
                for (auto& [n, eq] : rowEq)
                    if (!eq.isZero()) equations.push_back(std::move(eq));
            }
    return equations;
}

void runElim(benchmark::State& state, ElimMode mode) {
    auto base = homSystem(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        state.PauseTiming();
        auto rows = base;
        state.ResumeTiming();
        int rank = rowReduce(rows, mode);
        benchmark::DoNotOptimize(rank);
    }
}

void BM_rowReduce_serial(benchmark::State& state) { runElim(state, ElimMode::Serial); }
void BM_rowReduce_parallel(benchmark::State& state) { runElim(state, ElimMode::Parallel); }

} // namespace

BENCHMARK(BM_rowReduce_serial)->Args({2, 2})->Args({3, 2})->Args({4, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rowReduce_parallel)->Args({2, 2})->Args({3, 2})->Args({4, 2})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
