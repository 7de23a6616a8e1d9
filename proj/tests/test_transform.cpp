// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "gretl/cases.hpp"
#include "gretl/execute.hpp"
#include "gretl/io.hpp"
#include "gretl/transform.hpp"

using namespace gretl;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GretlError& e) {
    return e.kind();
  }
  FAIL("expected a GretlError");
  return ErrorKind::TypeError;
}

size_t non_empty_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("transform-parser") {

TEST_CASE("the bundled rules parse into the expected statement sequence") {
  Transformation t = parse_transformation(reference_transformation());
  CHECK(t.imports == std::vector<std::string>{"classifiers", "types", "members", "references",
                                              "statements", "modifiers"});
  REQUIRE(t.statements.size() == 8);
  CHECK(std::holds_alternative<GlobalBindingStmt>(t.statements[0].node));
  CHECK(std::holds_alternative<CreateVertexClassStmt>(t.statements[1].node));
  CHECK(std::holds_alternative<CreateAttributeStmt>(t.statements[2].node));
  CHECK(std::holds_alternative<CreateEdgeClassStmt>(t.statements[3].node));
  CHECK(std::holds_alternative<CreateAttributeStmt>(t.statements[4].node));
  CHECK(std::holds_alternative<SetAttributesStmt>(t.statements[5].node));
  CHECK(std::holds_alternative<SetAttributesStmt>(t.statements[6].node));
  CHECK(std::holds_alternative<CreateAttributeStmt>(t.statements[7].node));

  const auto& edge = std::get<CreateEdgeClassStmt>(t.statements[3].node);
  CHECK(edge.name == "Transition");
  CHECK(edge.from_class == "State");
  CHECK(edge.from_role == "src");
  CHECK(edge.to_class == "State");
  CHECK(edge.to_role == "dst");

  const auto& trigger = std::get<CreateAttributeStmt>(t.statements[4].node);
  CHECK(trigger.owner_class == "Transition");
  CHECK(trigger.attribute == "trigger");
  CHECK(trigger.domain == Domain::String);
  REQUIRE(trigger.default_value);
  CHECK(*trigger.default_value == Value::string("--"));

  CHECK(non_empty_lines(reference_transformation()) == 45);
}

TEST_CASE("import statements accumulate packages") {
  Transformation t = parse_transformation("import classifiers.*;\nimport a.b.*;");
  CHECK(t.imports == std::vector<std::string>{"classifiers", "a.b"});
  CHECK(t.statements.empty());
}

TEST_CASE("line comments are permitted") {
  Transformation t = parse_transformation(
      "// sets up the state class\n"
      "CreateVertexClass State <== from c: V{Class} reportSet c end; // trailing\n");
  CHECK(t.statements.size() == 1);
}

TEST_CASE("attribute declaration without a query is legal") {
  Transformation t =
      parse_transformation("CreateAttribute State.name : String = '\"--\"';");
  const auto& s = std::get<CreateAttributeStmt>(t.statements[0].node);
  CHECK_FALSE(s.query);
  REQUIRE(s.default_value);
  CHECK(*s.default_value == Value::string("--"));
}

TEST_CASE("syntax errors carry locations") {
  auto check_syntax_error = [](const std::string& text) {
    try {
      parse_transformation(text);
      FAIL("expected SyntaxError for: ", text);
    } catch (const GretlError& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(e.location().has_value());
    }
  };
  check_syntax_error("CreateVertexClass State <== from c: V{Class} reportSet c;");  // missing end
  check_syntax_error("CreateVertexClass <== from c: V{Class} reportSet c end;");
  check_syntax_error("import classifiers;");
  check_syntax_error("SetAttributes Transition <== x;");
  check_syntax_error("bogus statement;");
  check_syntax_error("CreateAttribute T.a : Float;");
}

TEST_CASE("AddSubClass statement") {
  Transformation t = parse_transformation("AddSubClass Sub Super;");
  const auto& s = std::get<AddSubClassStmt>(t.statements[0].node);
  CHECK(s.subclass == "Sub");
  CHECK(s.superclass == "Super");
}

}  // TEST_SUITE

namespace {

ExecutionContext run_on_fixture(const std::string& fixture_id, const std::string& rules,
                                const ExecutionObserver& observer = {}) {
  Fixture f = build_fixture(fixture_id);
  return execute(parse_transformation(rules), *f.graph, observer);
}

const char* kMiniImports =
    "import classifiers.*; import types.*; import members.*;\n"
    "import references.*; import statements.*; import modifiers.*;\n";

}  // namespace

TEST_SUITE("transform-exec") {

TEST_CASE("full extraction on fixture A matches the hand-traced golden") {
  Fixture f = build_fixture("A");
  ExecutionContext ctx = execute(parse_transformation(reference_transformation()), *f.graph);
  CHECK(ctx.target->vertex_count() == 2);
  CHECK(ctx.target->edge_count() == 4);
  LoadedGraph golden = golden_target(f.manifest);
  CHECK(diff_graphs(*ctx.target, *golden.graph).empty());
  // trace maps sized per manifest, tuple archetypes keyed correctly
  CHECK(ctx.trace.img("State").size() == 2);
  CHECK(ctx.trace.img("Transition").size() == 4);
  for (const auto& [archetype, image] : ctx.trace.img("Transition").entries()) {
    CHECK(archetype.is_tuple());
    CHECK(archetype.as_tuple().items.size() == 4);
    CHECK(image.is_edge());
  }
}

TEST_CASE("empty transformation produces an empty context") {
  ExecutionContext ctx = run_on_fixture("A", "");
  CHECK(ctx.target_schema->vertex_class_count() == 0);
  CHECK(ctx.target->vertex_count() == 0);
  CHECK(ctx.globals.empty());
  CHECK(ctx.trace.class_names().empty());
}

TEST_CASE("img map referenced before its class exists") {
  std::string rules = std::string(kMiniImports) +
                      "x := theElement(from c: V{Class} with c.name = \"State\" reportSet c end);\n"
                      "CreateVertexClass S2 <== keySet(img_State);\n";
  try {
    run_on_fixture("A", rules);
    FAIL("expected UnknownTraceMap");
  } catch (const GretlError& e) {
    CHECK(e.kind() == ErrorKind::UnknownTraceMap);
    CHECK(std::string(e.what()).find("statement 1") != std::string::npos);
  }
}

TEST_CASE("global bindings: duplicates and reserved names") {
  CHECK(kind_of([&] { run_on_fixture("A", "x := true;\nx := false;"); }) ==
        ErrorKind::DuplicateBinding);
  CHECK(kind_of([&] { run_on_fixture("A", "img_State := true;"); }) ==
        ErrorKind::DuplicateBinding);
}

TEST_CASE("binding aborts when two classes share the name State") {
  Fixture neg = build_negative_two_state_classes();
  CHECK(kind_of([&] {
          execute(parse_transformation(reference_transformation()), *neg.graph);
        }) == ErrorKind::NotSingleton);
}

TEST_CASE("CreateVertexClass: empty sets, non-sets, duplicate names") {
  std::string empty_query = std::string(kMiniImports) +
                            "CreateVertexClass S <== from c: V{Class} with c.name = \"no\" "
                            "reportSet c end;";
  ExecutionContext ctx = run_on_fixture("A", empty_query);
  CHECK(ctx.target_schema->find_vertex_class("S").has_value());
  CHECK(ctx.target->vertex_count() == 0);
  CHECK(ctx.trace.img("S").empty());

  CHECK(kind_of([&] {
          run_on_fixture("A", std::string(kMiniImports) +
                                  "CreateVertexClass S <== from c: V{Class} reportMap c -> c "
                                  "end;");
        }) == ErrorKind::NotASet);
  CHECK(kind_of([&] {
          run_on_fixture("A", std::string(kMiniImports) +
                                  "CreateVertexClass S <== from c: V{Class} reportSet c end;\n"
                                  "CreateVertexClass S <== from c: V{Class} reportSet c end;");
        }) == ErrorKind::DuplicateClassName);
}

TEST_CASE("CreateEdgeClass: unknown and duplicate archetypes") {
  std::string prefix = std::string(kMiniImports) +
                       "CreateVertexClass State <== from c: V{Class} with c.name = \"Locked\" "
                       "reportSet c end;\n";
  // second component never became a State
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "CreateEdgeClass T from State role a to State role b <== "
                                  "from c: V{Class} with c.name = \"Unlocked\" "
                                  "reportSet tup(c), c, c end;");
        }) == ErrorKind::UnknownArchetype);
  // two triples with the same first component
  std::string both = std::string(kMiniImports) +
                     "CreateVertexClass State <== from c: V{Class} with c.name = \"Locked\" or "
                     "c.name = \"Unlocked\" reportSet c end;\n"
                     "CreateEdgeClass T from State role a to State role b <== "
                     "from c: keySet(img_State) reportSet tup(1), c, c end;";
  CHECK(kind_of([&] { run_on_fixture("A", both); }) == ErrorKind::DuplicateArchetype);
  // malformed member
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "CreateEdgeClass T from State role a to State role b <== "
                                  "from c: keySet(img_State) reportSet c, c end;");
        }) == ErrorKind::NotTripleSet);
  // endpoint class missing from the target schema
  CHECK(kind_of([&] {
          run_on_fixture("A", std::string(kMiniImports) +
                                  "CreateEdgeClass T from Nope role a to Nope role b <== "
                                  "from c: V{Class} reportSet tup(c), c, c end;");
        }) == ErrorKind::UnknownClass);
}

TEST_CASE("CreateAttribute: map validation") {
  std::string prefix = std::string(kMiniImports) +
                       "CreateVertexClass State <== from c: V{Class} with c.name = \"Locked\" or "
                       "c.name = \"Unlocked\" reportSet c end;\n";
  ExecutionContext ctx = run_on_fixture(
      "A", prefix + "CreateAttribute State.name : String <== from c: keySet(img_State) "
                    "reportMap c -> c.name end;");
  REQUIRE(ctx.target->vertex_count() == 2);
  std::vector<std::string> names;
  for (uint32_t i = 0; i < 2; ++i)
    names.push_back(ctx.target->get_attribute(VertexId{i}, "name").as_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"Locked", "Unlocked"});

  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "CreateAttribute State.name : String <== from c: "
                                  "keySet(img_State) reportSet c end;");
        }) == ErrorKind::NotAMap);
  // a key outside img_State
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "CreateAttribute State.name : String <== from c: V{Class} "
                                  "reportMap c -> c.name end;");
        }) == ErrorKind::UnknownArchetype);
  // value domain mismatch
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "CreateAttribute State.num : Integer <== from c: "
                                  "keySet(img_State) reportMap c -> c.name end;");
        }) == ErrorKind::DomainMismatch);
  // duplicate attribute
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "CreateAttribute State.name : String;\n"
                                  "CreateAttribute State.name : String;");
        }) == ErrorKind::DuplicateAttribute);
  CHECK(kind_of([&] {
          run_on_fixture("A", std::string(kMiniImports) +
                                  "CreateAttribute Missing.name : String;");
        }) == ErrorKind::UnknownClass);
}

TEST_CASE("SetAttributes requires a previously created attribute") {
  std::string prefix = std::string(kMiniImports) +
                       "CreateVertexClass State <== from c: V{Class} with c.name = \"Locked\" "
                       "reportSet c end;\n";
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix +
                                  "SetAttributes State.name <== from c: keySet(img_State) "
                                  "reportMap c -> c.name end;");
        }) == ErrorKind::UnknownAttribute);
  // created first: works, updates listed elements only
  ExecutionContext ctx = run_on_fixture(
      "A", prefix + "CreateAttribute State.name : String = '\"?\"';\n"
                    "SetAttributes State.name <== from c: keySet(img_State) reportMap c -> "
                    "c.name end;");
  CHECK(ctx.target->get_attribute(VertexId{0}, "name").as_string() == "Locked");
}

TEST_CASE("AddSubClass wires target-schema inheritance") {
  std::string prefix = std::string(kMiniImports) +
                       "CreateVertexClass A <== from c: V{Class} with c.name = \"no\" reportSet "
                       "c end;\n"
                       "CreateVertexClass B <== from c: V{Class} with c.name = \"no\" reportSet "
                       "c end;\n";
  ExecutionContext ctx = run_on_fixture("A", prefix + "AddSubClass B A;");
  auto a = ctx.target_schema->require_vertex_class("A");
  auto b = ctx.target_schema->require_vertex_class("B");
  CHECK(ctx.target_schema->is_subclass_of(b, a));
  CHECK_FALSE(ctx.target_schema->is_subclass_of(a, b));

  CHECK(kind_of([&] { run_on_fixture("A", prefix + "AddSubClass A A;"); }) ==
        ErrorKind::InheritanceCycle);
  CHECK(kind_of([&] {
          run_on_fixture("A", prefix + "AddSubClass B A;\nAddSubClass A B;");
        }) == ErrorKind::InheritanceCycle);
  CHECK(kind_of([&] { run_on_fixture("A", prefix + "AddSubClass A Missing;"); }) ==
        ErrorKind::UnknownClass);
  // vertex/edge kind mismatch
  std::string with_edge = prefix +
                          "CreateEdgeClass E from A role x to B role y <== from c: V{Class} "
                          "with c.name = \"no\" reportSet tup(c), c, c end;\n";
  CHECK(kind_of([&] { run_on_fixture("A", with_edge + "AddSubClass E A;"); }) ==
        ErrorKind::KindMismatch);
  // edge class under edge class is fine
  std::string two_edges = with_edge +
                          "CreateEdgeClass F from A role p to B role q <== from c: V{Class} "
                          "with c.name = \"no\" reportSet tup(c), c, c end;\n";
  ExecutionContext ctx2 = run_on_fixture("A", two_edges + "AddSubClass F E;");
  CHECK(ctx2.target_schema->is_subclass_of(ctx2.target_schema->require_edge_class("F"),
                                           ctx2.target_schema->require_edge_class("E")));
}

TEST_CASE("per-statement invariants: bijective traces, co-valid target") {
  Fixture f = build_fixture("A");
  size_t observed = 0;
  ExecutionObserver observer = [&](size_t index, const ExecutionContext& ctx) {
    ++observed;
    std::string offending;
    CHECK_MESSAGE(ctx.trace.is_bijective(&offending), "statement ", index, " broke img/arch for ",
                  offending);
    CHECK_NOTHROW(ctx.target->validate());
  };
  execute(parse_transformation(reference_transformation()), *f.graph, observer);
  CHECK(observed == 8);
}

TEST_CASE("source graph is never mutated") {
  Fixture f = build_fixture("A");
  uint64_t before = f.graph->fingerprint();
  execute(parse_transformation(reference_transformation()), *f.graph);
  CHECK(f.graph->fingerprint() == before);
}

TEST_CASE("re-execution is deterministic") {
  Fixture f = build_fixture("A");
  Transformation rules = parse_transformation(reference_transformation());
  ExecutionContext first = execute(rules, *f.graph);
  ExecutionContext second = execute(rules, *f.graph);
  CHECK(save_graph_to_string(*first.target) == save_graph_to_string(*second.target));
  CHECK(export_trace_to_string(first.trace) == export_trace_to_string(second.trace));
}

TEST_CASE("statement errors carry index and source line") {
  std::string rules = "x := true;\ny := missingVariable;";
  try {
    run_on_fixture("A", rules);
    FAIL("expected UnboundVariable");
  } catch (const GretlError& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
    CHECK(std::string(e.what()).find("statement 1") != std::string::npos);
    REQUIRE(e.location().has_value());
    CHECK(e.location()->line == 2);
  }
}

}  // TEST_SUITE
