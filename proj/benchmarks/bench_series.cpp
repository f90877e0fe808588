#include <benchmark/benchmark.h>

#include "msp/contributions.hpp"
#include "msp/msp_series.hpp"
#include "msp/picard_fuchs.hpp"

using namespace msp;

namespace {

QSeries sample(int order) {
  QSeries f(order);
  for (int d = 1; d <= order; ++d) f[d] = rat(d * d + 1, d + 2);
  return f;
}

void BM_QSeriesMul(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  QSeries a = sample(n), b = sample(n);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QSeriesMul)->Arg(12)->Arg(24)->Arg(48);

void BM_QSeriesExp(benchmark::State& st) {
  QSeries f = sample(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(series_exp(f));
}
BENCHMARK(BM_QSeriesExp)->Arg(12)->Arg(24);

void BM_Revert(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  QSeries F = sample(n), tau = sample(n) * rat(1, 7);
  for (auto _ : st) benchmark::DoNotOptimize(revert_to_Q(F, tau));
}
BENCHMARK(BM_Revert)->Arg(12)->Arg(24);

void BM_IFunctions(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_mirror(build_ifunctions(static_cast<int>(st.range(0)))));
}
BENCHMARK(BM_IFunctions)->Arg(12)->Arg(24);

void BM_PicardFuchs(benchmark::State& st) {
  IFunctions I = build_ifunctions(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(pf_apply(I[3]));
}
BENCHMARK(BM_PicardFuchs)->Arg(12);

void BM_BiExp(benchmark::State& st) {
  MspContext ctx = build_msp_context(static_cast<int>(st.range(0)));
  BiSeries arg = BiSeries::from_q(ctx.tau, ctx.prec, -1);
  for (auto _ : st) benchmark::DoNotOptimize(bi_exp(arg));
}
BENCHMARK(BM_BiExp)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Regularize(benchmark::State& st) {
  MspContext ctx = build_msp_context(static_cast<int>(st.range(0)));
  BiSeries Z = z6_star(ctx);
  for (auto _ : st) benchmark::DoNotOptimize(regularize(Z));
}
BENCHMARK(BM_Regularize)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(assemble(static_cast<int>(st.range(0))).N1);
}
BENCHMARK(BM_Assemble)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
