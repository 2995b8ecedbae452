#include <benchmark/benchmark.h>

#include "qsup/moments.hpp"
#include "qsup/witnesses.hpp"

namespace {

const qsup::StateParams kParams = qsup::make_state({1.1, 0.4}, 0.38);

void BM_GeneralMoment(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::general_moment(kParams, order, order));
  }
}
BENCHMARK(BM_GeneralMoment)->Arg(1)->Arg(4)->Arg(8)->Arg(16);

void BM_MandelQ(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::mandel_q(kParams, l));
  }
}
BENCHMARK(BM_MandelQ)->Arg(2)->Arg(5)->Arg(10);

void BM_Hos(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::hos(kParams, l));
  }
}
BENCHMARK(BM_Hos)->Arg(2)->Arg(6)->Arg(10);

void BM_Klyshko(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::klyshko(kParams, 3));
  }
}
BENCHMARK(BM_Klyshko);

}  // namespace
