#include <benchmark/benchmark.h>

#include <random>

#include "rigidq/rigid.hpp"
#include "rigidq/subquot.hpp"

using namespace rigidq;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_SubQuotFill(benchmark::State& state) {
  auto roots = std::make_shared<const RootSystem>(parse_quiver("E8:><><><>"));
  for (auto _ : state) {
    SubQuotCache cache(roots);
    cache.fill_all(exec_of(state));
    benchmark::DoNotOptimize(cache.at(roots->size() - 1).subs.size());
  }
}
BENCHMARK(BM_SubQuotFill)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_HighestRootScan(benchmark::State& state) {
  RootSystem roots(parse_quiver("E8"));
  const auto& top = roots[roots.size() - 1];
  for (auto _ : state) benchmark::DoNotOptimize(sub_dim_vectors(roots, top, exec_of(state)).size());
}
BENCHMARK(BM_HighestRootScan)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_RigidMultiplicities(benchmark::State& state) {
  RigidEngine engine(parse_quiver("E8:<<>><<>"));
  engine.cache().fill_all();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> u(0, 50);
  std::vector<DimVector> ds(64, DimVector(8));
  for (auto& d : ds)
    for (std::size_t k = 0; k < 8; ++k) d[k] = u(rng);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(engine.rigid_multiplicities(ds[k++ % ds.size()], exec_of(state)));
}
BENCHMARK(BM_RigidMultiplicities)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
