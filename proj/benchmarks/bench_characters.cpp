#include <benchmark/benchmark.h>

#include "qgchar/checks.hpp"

using namespace qgchar;

namespace {

void BM_WeylEnumerate(benchmark::State& state, char type, int rank) {
  RootDatum datum = RootDatum::build(type, rank);
  for (auto _ : state) {
    WeylGroup group = WeylGroup::enumerate(datum);
    benchmark::DoNotOptimize(group.size());
  }
}
BENCHMARK_CAPTURE(BM_WeylEnumerate, a3, 'A', 3);
BENCHMARK_CAPTURE(BM_WeylEnumerate, b3, 'B', 3);
BENCHMARK_CAPTURE(BM_WeylEnumerate, d4, 'D', 4);

void BM_BruhatCovers(benchmark::State& state, char type, int rank) {
  RootDatum datum = RootDatum::build(type, rank);
  for (auto _ : state) {
    WeylGroup group = WeylGroup::enumerate(datum);
    benchmark::DoNotOptimize(group.bruhat_covers().size());
  }
}
BENCHMARK_CAPTURE(BM_BruhatCovers, b3, 'B', 3);
BENCHMARK_CAPTURE(BM_BruhatCovers, a4, 'A', 4);

void BM_KostantCharacter(benchmark::State& state) {
  FormulaContext ctx(RootDatum::build('A', 2), 1, static_cast<int>(state.range(0)),
                     Rat(-1));
  for (auto _ : state) {
    BigradedSeries s = kostant_character(ctx);
    benchmark::DoNotOptimize(s.num_terms());
  }
}
BENCHMARK(BM_KostantCharacter)->Arg(4)->Arg(8)->Arg(12);

void BM_SemiinfTilde(benchmark::State& state) {
  RootDatum datum = RootDatum::build('A', 2);
  long long depth_mult = state.range(0);
  Rat hmin = Rat(-depth_mult * 3) * datum.height(datum.two_rho());
  FormulaContext ctx(datum, 3, 0, hmin);
  for (auto _ : state) {
    BigradedSeries s = semiinf_tilde_character(ctx);
    benchmark::DoNotOptimize(s.num_terms());
  }
}
BENCHMARK(BM_SemiinfTilde)->Arg(2)->Arg(4)->Arg(6);

void BM_FeiginCheck(benchmark::State& state) {
  long long depth_mult = state.range(0);
  for (auto _ : state) {
    CheckResult r = check_feigin('A', 2, 3, depth_mult);
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_FeiginCheck)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
