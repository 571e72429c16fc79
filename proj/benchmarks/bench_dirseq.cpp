#include <benchmark/benchmark.h>

#include "dirseq/classify.hpp"
#include "dirseq/construct.hpp"
#include "dirseq/enumerate.hpp"
#include "dirseq/equivalence.hpp"

using namespace dirseq;

static void BM_ClosedForm(benchmark::State& state) {
    std::vector<int> entries;
    int left = static_cast<int>(state.range(0));
    while (left > 0) {
        int v = std::min(left, 3);
        entries.push_back(v);
        left -= v;
    }
    if (entries.size() < 2) entries = {1, 1};
    CentralSignature d(entries);
    for (auto _ : state) benchmark::DoNotOptimize(dc_closed_form(d));
}
BENCHMARK(BM_ClosedForm)->Arg(8)->Arg(14)->Arg(20);

static void BM_Inductive(benchmark::State& state) {
    CentralSignature d{3, 2, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(dc_inductive(d));
}
BENCHMARK(BM_Inductive);

static void BM_Equivalence(benchmark::State& state) {
    auto a = dc_closed_form({4, 4});
    auto b = canonical_relabel(rotate(a, 8));
    for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b));
}
BENCHMARK(BM_Equivalence);

static void BM_SweepGoldenTwelve(benchmark::State& state) {
    auto cfg = gen_family(FamilySpec::z5_12());
    for (auto _ : state) benchmark::DoNotOptimize(circular_sequence(cfg));
}
BENCHMARK(BM_SweepGoldenTwelve);

static void BM_Enumerate(benchmark::State& state) {
    CentralSignature d{2, 2};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_dc(d));
}
BENCHMARK(BM_Enumerate);

BENCHMARK_MAIN();
