#include <benchmark/benchmark.h>

#include "torelli/isocomplex.hpp"

using namespace torelli;

namespace {

const std::vector<Vec> kPlane{vec_of({1, 0, 0, 0}), vec_of({0, 0, 1, 0})};

void BM_SliceParallel(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_slice(static_cast<std::size_t>(st.range(0)), st.range(1)));
}

void BM_SliceSerial(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_slice_serial(static_cast<std::size_t>(st.range(0)), st.range(1)));
}

void BM_FareyParallel(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(farey_iso_check(kPlane, st.range(0)));
}

void BM_FareySerial(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(farey_iso_check_serial(kPlane, st.range(0)));
}

}  // namespace

BENCHMARK(BM_SliceParallel)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceSerial)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FareyParallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FareySerial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
