// Parallel engine against its serial mode and the textbook reference Buchberger.
#include "dgcalc/reference.hpp"
#include "dgcalc/zoo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace dgcalc;

std::vector<FreeElem> workload(int which)
{
    switch (which) {
    case 0:
        return zoo::killing(zoo::metric(zoo::MetricKind::Minkowski, 4)).rows();
    case 1:
        return zoo::einstein_lin(zoo::metric(zoo::MetricKind::Minkowski, 4)).rows();
    default:
        return zoo::conformal_killing(zoo::metric(zoo::MetricKind::Euclidean, 5)).rows();
    }
}

const char* workload_name(int which)
{
    switch (which) {
    case 0:
        return "killing_m4";
    case 1:
        return "einstein_m4";
    default:
        return "conformal_killing_e5";
    }
}

void BM_GroebnerParallel(benchmark::State& state)
{
    const auto rows = workload(static_cast<int>(state.range(0)));
    EngineOptions o;
    o.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner(rows, rows.front().width(), {}, o));
    state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

void BM_GroebnerSerial(benchmark::State& state)
{
    const auto rows = workload(static_cast<int>(state.range(0)));
    EngineOptions o;
    o.serial = true;
    for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner(rows, rows.front().width(), {}, o));
    state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

void BM_GroebnerReference(benchmark::State& state)
{
    const auto rows = workload(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::groebner(rows, rows.front().width()));
    state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

void BM_SyzygiesParallel(benchmark::State& state)
{
    const auto rows = workload(static_cast<int>(state.range(0)));
    EngineOptions o;
    o.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(syzygies(rows, o));
    state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

void BM_SyzygiesSerial(benchmark::State& state)
{
    const auto rows = workload(static_cast<int>(state.range(0)));
    EngineOptions o;
    o.serial = true;
    for (auto _ : state) benchmark::DoNotOptimize(syzygies(rows, o));
    state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_GroebnerParallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroebnerSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroebnerReference)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyzygiesParallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyzygiesSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
