#include "hhbv/suites.hpp"

#include <benchmark/benchmark.h>

using namespace hhbv;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(1) ? "parallel" : "serial"); }

void BM_BarComplex(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(check_bar_complex(static_cast<int>(s.range(0)), exec_of(s)).checked);
    label(s);
}

void BM_BarHomotopy(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(check_bar_homotopy(static_cast<int>(s.range(0)), exec_of(s)).checked);
    label(s);
}

void BM_Homotopy(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(check_homotopy(static_cast<int>(s.range(0)), exec_of(s)).checked);
    label(s);
}

void BM_PsiTable(benchmark::State& s)
{
    for (auto _ : s) {
        PsiTable t(static_cast<int>(s.range(0)), exec_of(s));
        benchmark::DoNotOptimize(t.level(t.max_degree()).size());
    }
    label(s);
}

void BM_PsiSquares(benchmark::State& s)
{
    PsiTable t(static_cast<int>(s.range(0)), Exec::parallel);
    for (auto _ : s) benchmark::DoNotOptimize(check_psi_squares(t, exec_of(s)).checked);
    label(s);
}

void BM_Connes(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(check_connes(static_cast<int>(s.range(0)), exec_of(s)).checked);
    label(s);
}

}  // namespace

BENCHMARK(BM_BarComplex)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BarHomotopy)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homotopy)->ArgsProduct({{8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiTable)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiSquares)->ArgsProduct({{4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Connes)->ArgsProduct({{3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
