#include <benchmark/benchmark.h>

#include "patlas/catalog.hpp"
#include "patlas/parser.hpp"

using namespace patlas;

namespace {

PoissonPresentation torus() {
  auto v = make_varset({"x", "y", "z"});
  return PoissonPresentation(BracketSpec::exact(parse_polynomial(v, "x*y*z - x^2 - y^2 - z^2 + 4")));
}

void BM_BoxScanParallel(benchmark::State& s) {
  auto pres = torus();
  SearchBox box{static_cast<int>(s.range(0)), 2, {}};
  for (auto _ : s) benchmark::DoNotOptimize(find_poisson_maximal(pres, box));
}

void BM_BoxScanSerial(benchmark::State& s) {
  auto pres = torus();
  SearchBox box{static_cast<int>(s.range(0)), 2, {}};
  for (auto _ : s) benchmark::DoNotOptimize(find_poisson_maximal_serial(pres, box));
}

void BM_RunAllParallel(benchmark::State& s) {
  RunOptions o;
  o.max_dim = 2;
  for (auto _ : s) benchmark::DoNotOptimize(run_all(o));
}

void BM_RunAllSerial(benchmark::State& s) {
  RunOptions o;
  o.max_dim = 2;
  for (auto _ : s) benchmark::DoNotOptimize(run_all_serial(o));
}

}  // namespace

BENCHMARK(BM_BoxScanParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxScanSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunAllParallel)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_RunAllSerial)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
