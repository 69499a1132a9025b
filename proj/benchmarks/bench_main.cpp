#include <benchmark/benchmark.h>

#include "gentle/ar.hpp"
#include "gentle/classifier.hpp"
#include "gentle/complex.hpp"
#include "gentle/walks.hpp"

using namespace gentle;

namespace {

const Walks& worked() {
    static const Walks w(build_normal_form({2, 3, 4, 2}));
    return w;
}

void BM_Enumerate(benchmark::State& state) {
    const Quiver& q = worked().quiver();
    for (auto _ : state) {
        long long n = 0;
        enumerate_strings(q, static_cast<int>(state.range(0)), [&](const HString&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(10);

void BM_StringComplexDSquared(benchmark::State& state) {
    const Quiver& q = worked().quiver();
    const auto strings = all_strings(q, 8);
    for (auto _ : state)
        for (const HString& s : strings) benchmark::DoNotOptimize(verify_d_squared(q, build_string_complex(q, 0, s)));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(strings.size()));
}
BENCHMARK(BM_StringComplexDSquared);

void BM_OmegaPlus(benchmark::State& state) {
    const auto strings = all_strings(worked().quiver(), 8);
    for (auto _ : state)
        for (const HString& s : strings) benchmark::DoNotOptimize(omega_plus(worked(), s));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(strings.size()));
}
BENCHMARK(BM_OmegaPlus);

void BM_DirectAlgorithm(benchmark::State& state) {
    const Quiver& q = worked().quiver();
    const auto strings = all_strings(q, 8);
    for (auto _ : state)
        for (const HString& s : strings) benchmark::DoNotOptimize(bobinski_direct(q, s));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(strings.size()));
}
BENCHMARK(BM_DirectAlgorithm);

void BM_Classify(benchmark::State& state) {
    const auto strings = all_strings(worked().quiver(), 8);
    for (auto _ : state)
        for (const HString& s : strings) benchmark::DoNotOptimize(classify(worked(), 0, s));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(strings.size()));
}
BENCHMARK(BM_Classify);

void BM_Crosscheck(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(crosscheck(worked(), 8, false, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Crosscheck)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(census(worked()));
}
BENCHMARK(BM_Census);

}  // namespace
BENCHMARK_MAIN();
