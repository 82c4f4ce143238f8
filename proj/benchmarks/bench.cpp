#include <benchmark/benchmark.h>

#include <cmath>

#include "bergman/ball.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

using namespace bergman;

static void BM_Gauss2F1(benchmark::State& state) {
  const double x = state.range(0) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_2f1(1.5, 1.5, 3.0, x));
  }
}
BENCHMARK(BM_Gauss2F1)->Arg(300)->Arg(840)->Arg(999);

static void BM_MoebiusMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BallPoint z = BallPoint::radial(n, 0.6);
  const BallPoint w = BallPoint::radial(n, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius_map(z, w));
  }
}
BENCHMARK(BM_MoebiusMap)->Arg(1)->Arg(2)->Arg(3);

static void BM_IntegrateV(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuadratureConfig cfg;
  cfg.sample_count = 100'000;
  cfg.seed = 1;
  auto f = [](const BallPoint& w) {
    return Complex(std::exp(-w.norm_sq()), 0.0);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_v(f, n, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.sample_count);
}
BENCHMARK(BM_IntegrateV)->Arg(1)->Arg(3);

static void BM_JClosedForm(benchmark::State& state) {
  const JIntegralSpec spec(2, -3.0, 0.5, 0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_closed_form(spec));
  }
}
BENCHMARK(BM_JClosedForm);

BENCHMARK_MAIN();
