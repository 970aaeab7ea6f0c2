// Serial reference against the OpenMP kernels. Arg 0 is the serial path,
// arg 1 the parallel one; certificates are identical either way, only the
// wall time differs.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "pretzel/classify.hpp"
#include "pretzel/freefactor.hpp"
#include "pretzel/knot.hpp"

using namespace pretzel;

namespace {

Budget budget_for(const benchmark::State& state) {
  Budget b;
  b.execution = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  return b;
}

struct Prepared {
  SchreierSystem sys;
  std::vector<Word> tuple;
};

Prepared prepare(const PretzelKnot& knot, bool h_side) {
  const BoundaryWords bw = boundary_generators(knot);
  const auto& amb = h_side ? bw.h : bw.k;
  SchreierSystem sys = SchreierSystem::build(bw.ambient, abelian_relations(amb));
  std::vector<Word> tuple;
  for (const auto& w : amb) tuple.push_back(sys.rewrite(w));
  return {std::move(sys), std::move(tuple)};
}

void BM_DropSearch(benchmark::State& state) {
  // Largest family member in the fixtures: 6 tuple words, 41 Schreier letters.
  static const Prepared p = prepare(alternating_family(3, 10), true);
  const Budget b = budget_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(certify_free_factor(p.sys, p.tuple, b));
}

void BM_DropSearchGenusOne(benchmark::State& state) {
  static const Prepared p = prepare(parse_knot("P(-5,13,15)"), false);
  const Budget b = budget_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(certify_free_factor(p.sys, p.tuple, b));
}

void BM_NielsenObstruction(benchmark::State& state) {
  static const Prepared p = prepare(parse_knot("P(-5,9,17)"), true);
  const Budget b = budget_for(state);
  const WordPair pair(p.tuple[0], p.tuple[1]);
  for (auto _ : state) benchmark::DoNotOptimize(certify_not_free_factor(p.sys, pair, b));
}

void BM_Sweep(benchmark::State& state) {
  static const std::vector<PretzelKnot> knots = sweep_knots(-2, 6, 14);
  AnalysisOptions options;
  options.budget = budget_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(knots, options));
  state.counters["knots"] = static_cast<double>(knots.size());
}

}  // namespace

BENCHMARK(BM_DropSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DropSearchGenusOne)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NielsenObstruction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
