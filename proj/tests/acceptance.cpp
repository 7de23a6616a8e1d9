// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line each.
// Exit code 0 only when every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "gretl/cases.hpp"
#include "gretl/eval.hpp"
#include "gretl/execute.hpp"
#include "gretl/io.hpp"
#include "gretl/query_parser.hpp"
#include "gretl/transform.hpp"
#include "support/subprocess.hpp"
#include "support/test_support.hpp"

#ifndef GRETL_CLI_PATH
#define GRETL_CLI_PATH "gretl"
#endif
#ifndef GRETL_FIXTURES_DIR
#define GRETL_FIXTURES_DIR "fixtures"
#endif

using namespace gretl;
using namespace gretl::testing;

namespace {

struct Failure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

std::string cli() { return std::string("GRETL_MINI_COLOR=0 ") + GRETL_CLI_PATH; }

// ---- 1. end-to-end case reproduction ----------------------------------------

void criterion_case_reproduction() {
  for (const Fixture& f : build_fixtures()) {
    CaseReport report = run_case(f);
    std::string diffs;
    for (const auto& d : report.diffs) diffs += "\n    " + d;
    require(report.pass && report.diffs.empty(),
            "fixture " + f.manifest.id + " diverges from its golden:" + diffs);
  }
}

// ---- 2. conciseness of the bundled rules -------------------------------------

void criterion_conciseness() {
  const std::string& text = reference_transformation();
  size_t lines = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) ++lines;
  require(lines <= 45, "rules have " + std::to_string(lines) + " non-empty lines (limit 45)");

  Transformation t = parse_transformation(text);
  require(t.imports.size() == 6, "expected 6 imported packages");
  size_t bindings = 0, operations = 0;
  for (const auto& s : t.statements)
    (std::holds_alternative<GlobalBindingStmt>(s.node) ? bindings : operations) += 1;
  require(bindings == 1 && operations == 7,
          "expected 1 binding + 7 operation statements, got " + std::to_string(bindings) + "+" +
              std::to_string(operations));
}

// ---- 3. desk-scale performance through the CLI --------------------------------

void criterion_performance() {
  RunResult r = run_command(cli() + " case");
  require(r.exit_code == 0, "case subcommand exited " + std::to_string(r.exit_code));
  require(r.out == "PASS A\nPASS B\nPASS C\n", "unexpected stdout payload:\n" + r.out);
  std::regex time_line(R"(\[time\] (\w+) (\d+) ms)");
  auto begin = std::sregex_iterator(r.err.begin(), r.err.end(), time_line);
  size_t count = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it, ++count) {
    long ms = std::stol((*it)[2]);
    require(ms < 2000, "fixture " + (*it)[1].str() + " took " + std::to_string(ms) + " ms");
  }
  require(count == 3, "expected 3 wall-clock reports, saw " + std::to_string(count));
}

// ---- 4. path engine equals the product-construction oracle --------------------

void criterion_path_oracle() {
  size_t instances = 0;
  for (uint32_t seed = 0; seed < 120; ++seed) {
    std::mt19937 rng(seed);
    RandomGraph rg = make_random_graph(rng, 30, 60);
    RPath rp = random_path(rng, rg, 4);
    std::vector<VertexId> start;
    for (uint32_t i = 0; i < rg.graph->vertex_count(); ++i)
      if (rng() % 3 == 0) start.push_back(VertexId{i});
    if (start.empty()) start.push_back(VertexId{0});

    auto t0 = std::chrono::steady_clock::now();
    Environment env(*rg.graph);
    auto engine = eval_path(start, to_path_expr(rp), env);
    auto oracle = oracle_reachable(start, rp, *rg.graph);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    require(engine == oracle, "engine/oracle disagree at seed " + std::to_string(seed));
    require(ms < 100.0, "seed " + std::to_string(seed) + " took " + std::to_string(ms) + " ms");
    ++instances;
  }
  require(instances >= 100, "not enough oracle instances");
}

// ---- 5. trigger partition across all fixtures ---------------------------------

void criterion_trigger_partition() {
  bool saw_method = false, saw_enum = false, saw_exception = false, saw_default = false;
  for (const Fixture& f : build_fixtures()) {
    const Graph& g = *f.graph;
    const Schema& s = g.schema();

    std::set<std::string> enum_names, non_run_methods, exception_names;
    for (VertexId v : g.vertices_of_type(s.require_vertex_class("members.EnumConstant")))
      enum_names.insert(g.get_attribute(v, "name").as_string());
    for (VertexId v : g.vertices_of_type(s.require_vertex_class("members.Method"))) {
      std::string n = g.get_attribute(v, "name").as_string();
      if (n != "run") non_run_methods.insert(n);
    }
    // caught exception types: CatchBlock -> parameter -> typeReference ->
    // classifierReferences -> target, walked directly
    auto targets = [&](VertexId v, const char* role) {
      std::vector<VertexId> out;
      for (EdgeId e : g.out_edges(v))
        if (s.edge_class(g.edge(e).cls).to_role == role) out.push_back(g.edge(e).to);
      return out;
    };
    for (VertexId cb : g.vertices_of_type(s.require_vertex_class("statements.CatchBlock")))
      for (VertexId p : targets(cb, "parameter"))
        for (VertexId tr : targets(p, "typeReference"))
          for (VertexId cr : targets(tr, "classifierReferences"))
            for (VertexId cls : targets(cr, "target"))
              exception_names.insert(g.get_attribute(cls, "name").as_string());

    // executed result matches the manifest, then classify
    ExecutionContext ctx = execute(parse_transformation(reference_transformation()), g);
    std::vector<std::string> actual, expected;
    for (uint32_t i = 0; i < ctx.target->edge_count(); ++i) {
      EdgeId e{i};
      const auto& edge = ctx.target->edge(e);
      actual.push_back(ctx.target->get_attribute(edge.from, "name").as_string() + "|" +
                       ctx.target->get_attribute(edge.to, "name").as_string() + "|" +
                       ctx.target->get_attribute(e, "trigger").as_string() + "|" +
                       ctx.target->get_attribute(e, "action").as_string());
    }
    for (const auto& t : f.manifest.transitions)
      expected.push_back(t.src + "|" + t.dst + "|" + t.trigger + "|" + t.action);
    std::sort(actual.begin(), actual.end());
    std::sort(expected.begin(), expected.end());
    require(actual == expected, "fixture " + f.manifest.id + " transitions deviate from manifest");

    for (const auto& t : f.manifest.transitions) {
      int buckets = 0;
      if (t.trigger == "--") {
        ++buckets;
        saw_default = true;
      }
      if (enum_names.count(t.trigger)) {
        ++buckets;
        saw_enum = true;
      }
      if (exception_names.count(t.trigger)) {
        ++buckets;
        saw_exception = true;
      }
      if (non_run_methods.count(t.trigger) && !enum_names.count(t.trigger) &&
          !exception_names.count(t.trigger)) {
        ++buckets;
        saw_method = true;
      }
      require(buckets == 1, "trigger '" + t.trigger + "' fits " + std::to_string(buckets) +
                                " buckets in fixture " + f.manifest.id);
    }
  }
  require(saw_method && saw_enum && saw_exception && saw_default,
          "not every trigger case is exercised by the fixtures");
}

// ---- 6. trace bijectivity after every statement --------------------------------

void criterion_trace_bijectivity() {
  for (const Fixture& f : build_fixtures()) {
    size_t statements = 0;
    ExecutionObserver observer = [&](size_t index, const ExecutionContext& ctx) {
      ++statements;
      std::string offending;
      require(ctx.trace.is_bijective(&offending),
              "img/arch not inverse for " + offending + " after statement " +
                  std::to_string(index) + " of fixture " + f.manifest.id);
    };
    ExecutionContext ctx =
        execute(parse_transformation(reference_transformation()), *f.graph, observer);
    require(statements == 8, "observer missed statements");
    require(ctx.trace.img("State").size() == f.manifest.state_names.size(),
            "img_State size deviates from manifest for fixture " + f.manifest.id);
    require(ctx.trace.img("Transition").size() == f.manifest.transitions.size(),
            "img_Transition size deviates from manifest for fixture " + f.manifest.id);
    for (const auto& [archetype, image] : ctx.trace.img("Transition").entries()) {
      require(archetype.is_tuple() && archetype.as_tuple().items.size() == 4,
              "transition archetypes must be 4-tuples");
      require(image.is_edge(), "transition images must be edges");
    }
  }
}

// ---- 7. theElement contract -----------------------------------------------------

void criterion_the_element() {
  SetValue empty;
  try {
    builtin_the_element(Value::set(empty));
    require(false, "size-0 theElement did not raise");
  } catch (const GretlError& e) {
    require(e.kind() == ErrorKind::NotSingleton, "size-0 raised the wrong kind");
  }
  SetValue two;
  two.insert(Value::integer(1));
  two.insert(Value::integer(2));
  try {
    builtin_the_element(Value::set(two));
    require(false, "size-2 theElement did not raise");
  } catch (const GretlError& e) {
    require(e.kind() == ErrorKind::NotSingleton, "size-2 raised the wrong kind");
  }

  // the duplicate-State negative fixture aborts the whole execution
  auto dir = fresh_temp_dir("neg");
  RunResult r = run_command(cli() + " transform --source " + std::string(GRETL_FIXTURES_DIR) +
                            "/neg_two_state_classes.graph --rules " +
                            std::string(GRETL_FIXTURES_DIR) + "/ExtractStateMachines.gretl" +
                            " --out " + (dir / "out.graph").string());
  require(r.exit_code == 1, "negative fixture exited " + std::to_string(r.exit_code));
  require(r.err.find("ERROR NotSingleton") == 0, "missing NotSingleton error line: " + r.err);
  std::filesystem::remove_all(dir);
}

// ---- 8. round-trip and byte-identical reruns ------------------------------------

void criterion_roundtrip_determinism() {
  for (uint32_t seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(50000 + seed);
    RandomGraph rg = make_random_graph(rng, 30, 60);
    std::string doc = save_graph_to_string(*rg.graph);
    LoadedGraph loaded = load_graph_from_string(doc);
    require(diff_graphs(*loaded.graph, *rg.graph).empty(),
            "load-save isomorphism failed at seed " + std::to_string(50000 + seed));
    require(save_graph_to_string(*loaded.graph) == doc,
            "re-save not byte-identical at seed " + std::to_string(50000 + seed));
    for (uint32_t i = 0; i < rg.graph->vertex_count(); ++i)
      require(loaded.graph->vertex(VertexId{i}).id == rg.graph->vertex(VertexId{i}).id,
              "ids not preserved");
  }

  auto dir = fresh_temp_dir("det");
  std::string base = cli() + " transform --source " + std::string(GRETL_FIXTURES_DIR) +
                     "/A.graph --rules " + std::string(GRETL_FIXTURES_DIR) +
                     "/ExtractStateMachines.gretl";
  RunResult r1 = run_command(base + " --out " + (dir / "o1.graph").string() + " --dot " +
                             (dir / "o1.dot").string() + " --trace " +
                             (dir / "o1.trace").string());
  RunResult r2 = run_command(base + " --out " + (dir / "o2.graph").string() + " --dot " +
                             (dir / "o2.dot").string() + " --trace " +
                             (dir / "o2.trace").string());
  require(r1.exit_code == 0 && r2.exit_code == 0, "transform rerun failed");
  require(slurp(dir / "o1.graph") == slurp(dir / "o2.graph"), "target bytes differ across runs");
  require(slurp(dir / "o1.dot") == slurp(dir / "o2.dot"), "dot bytes differ across runs");
  require(slurp(dir / "o1.trace") == slurp(dir / "o2.trace"), "trace bytes differ across runs");
  require(!slurp(dir / "o1.graph").empty(), "empty transform output");
  std::filesystem::remove_all(dir);
}

// ---- 9. negative paths through the CLI error-line format --------------------------

void criterion_negative_paths() {
  auto dir = fresh_temp_dir("negpath");
  std::string src = std::string(GRETL_FIXTURES_DIR) + "/A.graph";
  auto expect_error = [&](const std::string& rules, const std::string& kind) {
    auto rules_path = dir / (kind + ".gretl");
    write_text(rules_path, rules);
    RunResult r = run_command(cli() + " transform --source " + src + " --rules " +
                              rules_path.string() + " --out " + (dir / "out.graph").string());
    require(r.exit_code == 1, kind + ": exit code " + std::to_string(r.exit_code));
    require(r.err.rfind("ERROR " + kind + " ", 0) == 0,
            kind + ": error line is '" + r.err.substr(0, r.err.find('\n')) + "'");
  };

  const std::string imports =
      "import classifiers.*; import types.*; import members.*;\n"
      "import references.*; import statements.*; import modifiers.*;\n";

  expect_error(imports +
                   "CreateVertexClass State <== from c: V{Class} with c.name = \"Locked\" "
                   "reportSet c end;\n"
                   "SetAttributes State.name <== from c: keySet(img_State) reportMap c -> "
                   "c.name end;\n",
               "UnknownAttribute");
  expect_error(imports +
                   "CreateVertexClass State <== from c: V{Class} with c.name = \"Locked\" "
                   "reportSet c end;\n"
                   "CreateEdgeClass Transition from State role src to State role dst <== "
                   "from c: V{Class} with c.name = \"Unlocked\" reportSet tup(c), c, c end;\n",
               "UnknownArchetype");

  RunResult r = run_command(cli() + " query --source " + src +
                            " 'from c: V{Class} reportMap 1 -> c.name end'");
  require(r.exit_code == 1, "query exit code " + std::to_string(r.exit_code));
  require(r.err.rfind("ERROR MapKeyConflict ", 0) == 0,
          "MapKeyConflict: error line is '" + r.err.substr(0, r.err.find('\n')) + "'");
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void()> check;
  };
  std::vector<Criterion> criteria = {
      {1, "end-to-end case reproduction on fixtures A, B, C", criterion_case_reproduction},
      {2, "bundled rules stay within 45 non-empty lines", criterion_conciseness},
      {3, "each fixture transforms in under two seconds", criterion_performance},
      {4, "path engine equals brute-force reachability on 100+ seeds", criterion_path_oracle},
      {5, "transition triggers partition into the four cases", criterion_trigger_partition},
      {6, "trace maps stay bijective after every statement", criterion_trace_bijectivity},
      {7, "theElement rejects non-singletons and aborts execution", criterion_the_element},
      {8, "round-trip isomorphism and byte-identical reruns", criterion_roundtrip_determinism},
      {9, "negative paths surface machine-parseable errors", criterion_negative_paths},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.check();
      std::printf("ACCEPTANCE %d PASS %s\n", c.id, c.name);
    } catch (const Failure& f) {
      ++failures;
      std::printf("ACCEPTANCE %d FAIL %s\n", c.id, c.name);
      std::printf("  %s\n", f.detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("ACCEPTANCE %d FAIL %s\n", c.id, c.name);
      std::printf("  unexpected exception: %s\n", e.what());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of %zu criteria failing\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
