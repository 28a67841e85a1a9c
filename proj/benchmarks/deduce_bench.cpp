#include <benchmark/benchmark.h>

#include <string>

#include "deduce/categorical.hpp"
#include "deduce/jugs.hpp"
#include "deduce/parser.hpp"
#include "deduce/truth_table.hpp"

namespace {

using namespace deduce;

// (A1 -> A2) & (A2 -> A3) & ... -> (A1 -> An): a tautology, so classify
// has to scan every row.
Formula implication_chain(int n) {
  std::string text = "(";
  for (int i = 1; i < n; ++i) {
    if (i > 1) text += " & ";
    text += "(A" + std::to_string(i) + " -> A" + std::to_string(i + 1) + ")";
  }
  text += ") -> (A1 -> A" + std::to_string(n) + ")";
  return parse(text);
}

void BM_ClassifyChain(benchmark::State& state) {
  const auto f = implication_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << state.range(0)));
}
BENCHMARK(BM_ClassifyChain)->DenseRange(4, 24, 4)->Unit(benchmark::kMicrosecond);

void BM_ParsePrint(benchmark::State& state) {
  const auto text = print(implication_chain(16), Style::Unicode);
  for (auto _ : state) benchmark::DoNotOptimize(print(parse(text)));
}
BENCHMARK(BM_ParsePrint);

void BM_SyllogismRegistry(benchmark::State& state) {
  const bool import = state.range(0) != 0;
  for (auto _ : state) {
    for (const auto& mood : syllogism_registry()) benchmark::DoNotOptimize(valid_syllogism(mood.syllogism, import));
  }
}
BENCHMARK(BM_SyllogismRegistry)->Arg(0)->Arg(1);

void BM_JugsCertificate(benchmark::State& state) {
  const jugs::JugProblem p{999'983, 999'979, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(jugs::plan(p, jugs::PlanStrategy::Certificate));
}
BENCHMARK(BM_JugsCertificate)->Arg(1)->Arg(1'000'000'000);

void BM_JugsShortest(benchmark::State& state) {
  const jugs::JugProblem p{97, 89, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(jugs::plan(p, jugs::PlanStrategy::Shortest));
}
BENCHMARK(BM_JugsShortest)->Arg(1'000)->Arg(100'000)->Arg(5'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
