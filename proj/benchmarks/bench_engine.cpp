// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "gretl/cases.hpp"
#include "gretl/eval.hpp"
#include "gretl/execute.hpp"
#include "gretl/io.hpp"
#include "gretl/query_parser.hpp"
#include "gretl/transform.hpp"

namespace {

using namespace gretl;

void BM_ParseRules(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_transformation(reference_transformation()));
}
BENCHMARK(BM_ParseRules);

void BM_ExecuteFixtureA(benchmark::State& state) {
  Fixture f = build_fixture("A");
  Transformation rules = parse_transformation(reference_transformation());
  for (auto _ : state) {
    ExecutionContext ctx = execute(rules, *f.graph);
    benchmark::DoNotOptimize(ctx.target->edge_count());
  }
}
BENCHMARK(BM_ExecuteFixtureA);

void BM_CasePipeline(benchmark::State& state) {
  Fixture f = build_fixture("A");
  for (auto _ : state) {
    CaseReport report = run_case(f);
    benchmark::DoNotOptimize(report.pass);
  }
}
BENCHMARK(BM_CasePipeline);

void BM_PathIteration(benchmark::State& state) {
  Fixture f = build_fixture("A");
  Environment env(*f.graph, {"classifiers", "types", "members", "references", "statements",
                             "modifiers"});
  QueryAst ast = parse_query(
      "{Class} & (<>--{extends} <>--{classifierReferences} -->{target})+ x");
  const auto& app = std::get<PathApplication>(ast->node);
  std::vector<VertexId> start;
  for (uint32_t i = 0; i < f.graph->vertex_count(); ++i) start.push_back(VertexId{i});
  for (auto _ : state) {
    auto reached = eval_path(start, app.path, env);
    benchmark::DoNotOptimize(reached.size());
  }
}
BENCHMARK(BM_PathIteration);

void BM_SaveLoadRoundTrip(benchmark::State& state) {
  Fixture f = build_fixture("A");
  for (auto _ : state) {
    LoadedGraph loaded = load_graph_from_string(save_graph_to_string(*f.graph));
    benchmark::DoNotOptimize(loaded.graph->vertex_count());
  }
}
BENCHMARK(BM_SaveLoadRoundTrip);

}  // namespace

BENCHMARK_MAIN();
