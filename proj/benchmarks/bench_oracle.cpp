#include <benchmark/benchmark.h>

#include "qsup/oracle.hpp"

namespace {

const qsup::StateParams kParams = qsup::make_state({1.1, 0.4}, 0.38);

void BM_FockCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::fock_coefficients(kParams, 1e-12, 32));
  }
}
BENCHMARK(BM_FockCoefficients);

void BM_LadderMatrices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::LadderMatrices::make(n));
  }
}
BENCHMARK(BM_LadderMatrices)->Arg(64)->Arg(128)->Arg(200);

void BM_OracleCentralMoment(benchmark::State& state) {
  const auto fock = qsup::fock_coefficients(kParams, 1e-12, 32);
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qsup::oracle_central_moment(fock, qsup::Observable::Quadrature, l));
  }
}
BENCHMARK(BM_OracleCentralMoment)->Arg(2)->Arg(6)->Arg(10);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsup::verify_all(kParams, 1e-8));
  }
}
BENCHMARK(BM_VerifyAll);

}  // namespace
