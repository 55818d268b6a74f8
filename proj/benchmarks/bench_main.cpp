#include <benchmark/benchmark.h>

#include "ruledmmp/generator.hpp"
#include "ruledmmp/io.hpp"
#include "ruledmmp/verify.hpp"

namespace {

using namespace ruledmmp;

SurfacePair sized_instance(std::int64_t blowups) {
  return random_instance(17, {2, 2, blowups, 0.5, 1});
}

void BM_generate(benchmark::State& state) {
  GeneratorParams params{2, 2, state.range(0), 0.5, 1};
  for (auto _ : state) benchmark::DoNotOptimize(random_instance(17, params));
}
BENCHMARK(BM_generate)->Arg(4)->Arg(8)->Arg(12);

void BM_run(benchmark::State& state) {
  SurfacePair sp = sized_instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(sp));
}
BENCHMARK(BM_run)->Arg(4)->Arg(8)->Arg(12);

void BM_verify_all(benchmark::State& state) {
  SurfacePair sp = sized_instance(state.range(0));
  GoodModelPlan plan = run(sp);
  for (auto _ : state) benchmark::DoNotOptimize(run_checks(sp, plan, {}));
}
BENCHMARK(BM_verify_all)->Arg(4)->Arg(8)->Arg(12);

void BM_instance_round_trip(benchmark::State& state) {
  SurfacePair sp = sized_instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parse_instance(serialize_instance(sp)));
}
BENCHMARK(BM_instance_round_trip)->Arg(4)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
