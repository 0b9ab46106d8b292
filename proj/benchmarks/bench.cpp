#include <benchmark/benchmark.h>

#include "cq/explorer.hpp"

using namespace cq;

static void EvalCenter(benchmark::State& state) {
  const auto& reg = default_registry();
  const CenterDef& def = reg.at(static_cast<int>(state.range(0)));
  double a = 1.3, b = 1.1, c = 0.9;
  for (auto _ : state) {
    auto r = eval_center(def, a, b, c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(EvalCenter)->Arg(2)->Arg(402)->Arg(151)->Arg(356);

static void GenerateShape(benchmark::State& state) {
  const ShapeClass s = static_cast<ShapeClass>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto q = generate(s, seed++);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(GenerateShape)
    ->Arg(static_cast<int>(ShapeClass::General))
    ->Arg(static_cast<int>(ShapeClass::Bicentric))
    ->Arg(static_cast<int>(ShapeClass::APquad));

static void SweepCell(benchmark::State& state) {
  const auto& reg = default_registry();
  SweepConfig cfg;
  cfg.shapes = {ShapeClass::Orthodiagonal};
  cfg.radiators = {RadiatorKind::DiagonalPoint};
  cfg.centers = {static_cast<int>(state.range(0))};
  cfg.parallel = false;
  for (auto _ : state) {
    auto fs = run_sweep(cfg, reg);
    benchmark::DoNotOptimize(fs);
  }
}
BENCHMARK(SweepCell)->Arg(546)->Arg(175);

static void RecognizeExtended(benchmark::State& state) {
  // worst case: an unrecognizable value scans the whole lattice
  for (auto _ : state) {
    auto r = recognize_constant(0.7390851332151607, RecognitionMode::Extended);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(RecognizeExtended);

BENCHMARK_MAIN();
