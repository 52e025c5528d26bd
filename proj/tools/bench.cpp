// Serial reference vs OpenMP kernels on a synthetic sheet of grids.
#include <benchmark/benchmark.h>

#include <string>

#include "diagc/expander.hpp"
#include "diagc/layout.hpp"
#include "diagc/parser.hpp"

namespace {

diagc::DiagramSource sheet(int n) {
  std::string src = "\\bfig\n";
  for (int i = 0; i < n; ++i) {
    int x = (i % 50) * 1500, y = (i / 50) * 1500;
    src += "\\iiixiii(" + std::to_string(x) + "," + std::to_string(y) +
           "){4095}[A`B`C`D`E`F`G`H`I;a`b`c`d`e`f`g`h`i`j`k`l]\n";
  }
  src += "\\efig\n";
  return diagc::parse_source(src).front();
}

const diagc::FontMetrics& metrics() {
  static const diagc::FontMetrics m = diagc::FontMetrics::default_table();
  return m;
}

void BM_ExpandSerial(benchmark::State& st) {
  auto src = sheet(static_cast<int>(st.range(0)));
  diagc::ExpandContext ctx{&metrics()};
  for (auto _ : st) benchmark::DoNotOptimize(diagc::expand_diagram_serial(src, ctx));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_ExpandParallel(benchmark::State& st) {
  auto src = sheet(static_cast<int>(st.range(0)));
  diagc::ExpandContext ctx{&metrics()};
  for (auto _ : st) benchmark::DoNotOptimize(diagc::expand_diagram(src, ctx));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_LayoutSerial(benchmark::State& st) {
  diagc::ExpandContext ctx{&metrics()};
  auto ir = diagc::merge_duplicate_nodes(diagc::expand_diagram(sheet(static_cast<int>(st.range(0))), ctx).ir);
  for (auto _ : st) benchmark::DoNotOptimize(diagc::layout_diagram_serial(ir, metrics()));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(ir.arrows.size()));
}

void BM_LayoutParallel(benchmark::State& st) {
  diagc::ExpandContext ctx{&metrics()};
  auto ir = diagc::merge_duplicate_nodes(diagc::expand_diagram(sheet(static_cast<int>(st.range(0))), ctx).ir);
  for (auto _ : st) benchmark::DoNotOptimize(diagc::layout_diagram(ir, metrics()));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(ir.arrows.size()));
}

}  // namespace

BENCHMARK(BM_ExpandSerial)->Arg(100)->Arg(2000);
BENCHMARK(BM_ExpandParallel)->Arg(100)->Arg(2000);
BENCHMARK(BM_LayoutSerial)->Arg(100)->Arg(2000);
BENCHMARK(BM_LayoutParallel)->Arg(100)->Arg(2000);

BENCHMARK_MAIN();
