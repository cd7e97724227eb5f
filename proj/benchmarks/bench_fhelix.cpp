#include <benchmark/benchmark.h>

#include "fhelix/fhelix.hpp"

using namespace fhelix;

static void BM_JetCompose(benchmark::State& state) {
  const Expr e = parse_expression("exp(sin(s)^2) / sqrt(1 + s^2) + ln(2 + cos(3*s))", ExprKind::curve, 1);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_jet(e, 0.7, order));
}
BENCHMARK(BM_JetCompose)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

static void BM_FieldJet(benchmark::State& state) {
  const CurveSpec spec = catalog_spec("paper_3_1");
  const std::vector<double> p{0.3, -1.2, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(eval_field_jet(spec, p));
}
BENCHMARK(BM_FieldJet);

static void BM_Frenet(benchmark::State& state) {
  const char* name = state.range(0) == 3 ? "helix345_fz" : "slant_r4";
  const CurveSpec spec = catalog_spec(name);
  const auto jets = eval_curve_jet(spec, 0.5, default_jet_order(spec.dimension));
  for (auto _ : state) benchmark::DoNotOptimize(frenet_apparatus(jets, spec.tol_frame, 0.5));
}
BENCHMARK(BM_Frenet)->Arg(3)->Arg(4);

static void BM_Classify(benchmark::State& state) {
  const CurveSpec spec = catalog_spec(state.range(0) == 3 ? "paper_3_1" : "helix_r4");
  for (auto _ : state) benchmark::DoNotOptimize(classify(spec));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  const CurveSpec spec = catalog_spec(state.range(0) == 3 ? "helix345_fz" : "slant_r4");
  for (auto _ : state) benchmark::DoNotOptimize(verify(spec));
}
BENCHMARK(BM_Verify)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
