#include <benchmark/benchmark.h>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

static void BM_LayoutOddWrap(benchmark::State& state) {
  const auto prog = build_odd_wrap(static_cast<int>(state.range(0)), Presentation::closed);
  for (auto _ : state) benchmark::DoNotOptimize(layout(prog));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LayoutOddWrap)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void BM_Unfold(benchmark::State& state) {
  const auto lay = layout(build_pinwheel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(unfold(lay));
}
BENCHMARK(BM_Unfold)->Arg(4)->Arg(24);

static void BM_ExtractDiagram(benchmark::State& state) {
  const auto lay = layout(build_odd_wrap(static_cast<int>(state.range(0)), Presentation::closed));
  for (auto _ : state) benchmark::DoNotOptimize(extract_diagram(lay));
}
BENCHMARK(BM_ExtractDiagram)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_Alexander(benchmark::State& state) {
  const auto d = extract_diagram(layout(build_odd_wrap(static_cast<int>(state.range(0)), Presentation::closed)));
  state.counters["crossings"] = static_cast<double>(d.crossing_count());
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(d));
}
BENCHMARK(BM_Alexander)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CertifySevenFour(benchmark::State& state) {
  const auto prog = build_74();
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_knot_type(prog, seven_four_alexander(), kSevenFourCrossings, "7_4"));
}
BENCHMARK(BM_CertifySevenFour)->Unit(benchmark::kMicrosecond);

static void BM_QuotientTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quotient_table(quotient_rows(12, 25, true), TableFormat::csv));
}
BENCHMARK(BM_QuotientTable)->Unit(benchmark::kMillisecond);

static void BM_RenderSvg(benchmark::State& state) {
  const auto lay = layout(build_star_polygon(static_cast<int>(state.range(0))));
  RenderOptions opt;
  opt.show_circumcircle = true;
  for (auto _ : state) benchmark::DoNotOptimize(to_svg(lay, opt));
}
BENCHMARK(BM_RenderSvg)->Arg(7)->Arg(101);

BENCHMARK_MAIN();
