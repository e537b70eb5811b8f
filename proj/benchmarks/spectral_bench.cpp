#include <memory>

#include <benchmark/benchmark.h>

#include "wecopt/dynamics/spectral_solver.hpp"
#include "wecopt/hydrodyn/analytic_hydro.hpp"
#include "wecopt/hydrodyn/hydro_provider.hpp"
#include "wecopt/objectives/climate.hpp"
#include "wecopt/objectives/evaluation.hpp"

namespace {

using namespace wecopt;

void BM_AnalyticHydro(benchmark::State& state) {
  const WecGeometry g;
  const FrequencyGrid grid = FrequencyGrid::Uniform(0.1, 3.0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(AnalyticHydro(g, grid));
}
BENCHMARK(BM_AnalyticHydro)->Arg(60)->Arg(240);

void BM_SpectralSolve(benchmark::State& state) {
  const WecGeometry g;
  const SpectralModel model(g, AnalyticHydro(g, FrequencyGrid::Default()), BuildDragModel(g));
  SolverOptions opt;
  opt.update = state.range(0) ? LinearisationUpdate::kDirect : LinearisationUpdate::kSecant;
  for (auto _ : state) benchmark::DoNotOptimize(model.Solve({2e5, 1.5e5}, {3.0, 8.0}, opt));
}
BENCHMARK(BM_SpectralSolve)->ArgName("direct")->Arg(0)->Arg(1);

void BM_EvaluateDesign(benchmark::State& state) {
  const Evaluator ev(LoadClimate(std::string(WECOPT_BENCH_DATA) + "/toy_climate.csv"),
                     std::make_shared<AnalyticHydroProvider>());
  DesignVector d;
  d.stiffness.assign(ev.space().states(), 2e5);
  d.damping.assign(ev.space().states(), 1.5e5);
  for (auto _ : state) benchmark::DoNotOptimize(ev.Evaluate(d));
}
BENCHMARK(BM_EvaluateDesign)->Unit(benchmark::kMillisecond);

}  // namespace
