#include <benchmark/benchmark.h>

#include "k3pell/k3class.hpp"
#include "k3pell/pell.hpp"
#include "k3pell/qform.hpp"

using namespace k3pell;

static void BM_CfSqrt(benchmark::State& state) {
  const Int delta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pell::cf_sqrt(delta));
}
BENCHMARK(BM_CfSqrt)->Arg(1621)->Arg(99991)->Arg(9999991);

static void BM_FundamentalUnit(benchmark::State& state) {
  const Int D(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pell::fundamental_unit_pm4(D));
}
BENCHMARK(BM_FundamentalUnit)->Arg(1621)->Arg(99989)->Arg(9999973);

static void BM_ClassInventory(benchmark::State& state) {
  const Int D(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qform::class_inventory(D));
}
BENCHMARK(BM_ClassInventory)->Arg(85)->Arg(1620)->Arg(20005);

static void BM_MollinCriterion(benchmark::State& state) {
  const Int delta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pell::mollin_criterion(delta));
}
BENCHMARK(BM_MollinCriterion)->Arg(4999)->Arg(4620);

static void BM_Witness(benchmark::State& state) {
  const Int alpha(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k3class::witness(-1, alpha));
}
BENCHMARK(BM_Witness)->Arg(4)->Arg(11)->Arg(99);

static void BM_OguisoClassification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k3class::oguiso_classification());
}
BENCHMARK(BM_OguisoClassification);

BENCHMARK_MAIN();
