#include <benchmark/benchmark.h>

#include "qssim/codes.hpp"
#include "qssim/noise.hpp"
#include "qssim/protocol.hpp"

using namespace qssim;

namespace {

ProtocolConfig damping_config(double gamma) {
  ProtocolConfig cfg;
  cfg.parties = 3;
  cfg.hops.assign(3, NoiseSpec{DampingNoise{gamma}});
  return cfg;
}

void BM_LiftIidDamping5(benchmark::State& state) {
  FiveQubitCode code;
  DensityMatrix rho = DensityMatrix::pure(code.encode(states::plus()));
  KrausChannel ch = amplitude_damping(0.1);
  for (auto _ : state) {
    DensityMatrix out = lift_iid(rho, ch);
    benchmark::DoNotOptimize(out.matrix().data());
  }
}
BENCHMARK(BM_LiftIidDamping5);

void BM_FiveQubitRecoverDecode(benchmark::State& state) {
  FiveQubitCode code;
  DensityMatrix rho = lift_iid(DensityMatrix::pure(code.encode(states::plus())),
                               amplitude_damping(0.1));
  for (auto _ : state) {
    DensityMatrix out = code.recover_decode(rho);
    benchmark::DoNotOptimize(out.matrix().data());
  }
}
BENCHMARK(BM_FiveQubitRecoverDecode);

void BM_RunExactDamping(benchmark::State& state) {
  ProtocolConfig cfg = damping_config(0.1);
  for (auto _ : state) {
    ErrorReport r = run_exact(cfg);
    benchmark::DoNotOptimize(r.error_exact);
  }
}
BENCHMARK(BM_RunExactDamping);

void BM_RunExactFiveQubitPerHop(benchmark::State& state) {
  ProtocolConfig cfg = damping_config(0.1);
  cfg.qec = {CodeScheme::FiveQubit, QecMode::PerHop};
  for (auto _ : state) {
    ErrorReport r = run_exact(cfg);
    benchmark::DoNotOptimize(r.error_exact);
  }
}
BENCHMARK(BM_RunExactFiveQubitPerHop);

void BM_MonteCarloPlain(benchmark::State& state) {
  ProtocolConfig cfg = damping_config(0.1);
  cfg.evaluation = EvaluationMode::MonteCarlo;
  cfg.trials = state.range(0);
  cfg.seed = 1;
  for (auto _ : state) {
    ErrorReport r = run_montecarlo(cfg);
    benchmark::DoNotOptimize(r.error_mc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloPlain)->Arg(10000)->Arg(100000);

void BM_MonteCarloRepetition(benchmark::State& state) {
  ProtocolConfig cfg = damping_config(0.2);
  cfg.qec.scheme = CodeScheme::Repetition;
  cfg.evaluation = EvaluationMode::MonteCarlo;
  cfg.trials = state.range(0);
  cfg.seed = 1;
  for (auto _ : state) {
    ErrorReport r = run_montecarlo(cfg);
    benchmark::DoNotOptimize(r.error_mc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloRepetition)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
