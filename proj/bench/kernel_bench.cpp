// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "pickfreeze/benchmarks.hpp"
#include "pickfreeze/metamodel/families.hpp"
#include "pickfreeze/parallel.hpp"
#include "pickfreeze/sampling.hpp"

using namespace pickfreeze;

namespace {

const ModelSpec& ishigami_x1() {
  static const ModelSpec model = ishigami_model().for_block("x1");
  return model;
}

void BM_pick_freeze_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_pick_freeze_serial(ishigami_x1(), n, RngStream(1, 0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_pick_freeze_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  set_default_workers(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_pick_freeze(ishigami_x1(), n, RngStream(1, 0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_inputs_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_inputs_serial(ishigami_x1().input_laws, n, RngStream(1, 0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_inputs_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  set_default_workers(static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_inputs(ishigami_x1().input_laws, n, RngStream(1, 0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct PredictFixture {
  Surrogate surrogate = train_rkhs(ishigami_x1(), 293, RngStream(1, 0));
  Matrix points = sample_inputs_serial(ishigami_x1().input_laws, 10000, RngStream(2, 0));
};

const PredictFixture& predict_fixture() {
  static const PredictFixture f;
  return f;
}

void BM_predict_serial(benchmark::State& state) {
  const auto& f = predict_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(f.surrogate.predict_batch_serial(f.points));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.points.rows));
}

void BM_predict_parallel(benchmark::State& state) {
  const auto& f = predict_fixture();
  set_default_workers(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f.surrogate.predict_batch(f.points));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.points.rows));
}

}  // namespace

BENCHMARK(BM_pick_freeze_serial)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_pick_freeze_parallel)->ArgsProduct({{100000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_inputs_serial)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_inputs_parallel)->ArgsProduct({{100000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_predict_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_predict_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
