#include <benchmark/benchmark.h>

#include "qosc/schwinger.hpp"
#include "qosc/truncation.hpp"

namespace {

using namespace qosc;

void BM_BuildOsc(benchmark::State& state) {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OscParams p;
    p.kind = OscKind::HY;
    p.d = d;
    p.dim = dim;
    p.nu0 = {0.3, 0.0};
    p.lambda0 = {0.2, 0.0};
    benchmark::DoNotOptimize(build_general_osc(p));
  }
}
BENCHMARK(BM_BuildOsc)->Arg(16)->Arg(64)->Arg(256);

void BM_Tensor(benchmark::State& state) {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const int dim = static_cast<int>(state.range(0));
  const OscRep r = build_fock_osc(OscKind::MB, d, dim);
  for (auto _ : state)
    benchmark::DoNotOptimize(tensor(r.adag, r.a));
}
BENCHMARK(BM_Tensor)->Arg(8)->Arg(16)->Arg(32);

void BM_MbSchwingerVerify(benchmark::State& state) {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const int dim = static_cast<int>(state.range(0));
  const OscRep r = build_fock_osc(OscKind::MB, d, dim);
  const TwoModeSystem s = schwinger_build(r, r);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_mb_schwinger(s, {1, 1}));
}
BENCHMARK(BM_MbSchwingerVerify)->Arg(6)->Arg(10)->Arg(14);

void BM_TruncationScan(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 1; i <= static_cast<int>(state.range(0)); ++i)
    grid.push_back(0.1 * i);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_equivalence(grid, 4, {0, 1}));
}
BENCHMARK(BM_TruncationScan)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
