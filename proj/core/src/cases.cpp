// SPDX-License-Identifier: Apache-2.0
#include "gretl/cases.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gretl/execute.hpp"
#include "gretl/transform.hpp"

namespace gretl {

using nlohmann::json;

SchemaPtr mini_java_schema() {
  auto s = std::make_shared<Schema>("MiniJava");

  auto cls = s->add_vertex_class("classifiers.Class", false);
  auto enumeration = s->add_vertex_class("classifiers.Enumeration", false);
  auto ncr = s->add_vertex_class("types.NamespaceClassifierReference", false);
  auto cr = s->add_vertex_class("types.ClassifierReference", false);
  auto member = s->add_vertex_class("members.Member", true);
  auto method = s->add_vertex_class("members.Method", false);
  auto enum_constant = s->add_vertex_class("members.EnumConstant", false);
  auto parameter = s->add_vertex_class("members.Parameter", false);
  auto modifier = s->add_vertex_class("modifiers.Modifier", true);
  auto mod_abstract = s->add_vertex_class("modifiers.Abstract", false);
  auto mod_public = s->add_vertex_class("modifiers.Public", false);
  auto call = s->add_vertex_class("references.MethodCall", false);
  auto ident_ref = s->add_vertex_class("references.IdentifierReference", false);
  auto arg_list = s->add_vertex_class("references.ArgumentList", false);
  auto argument = s->add_vertex_class("references.Argument", false);
  auto statement = s->add_vertex_class("statements.Statement", true);
  auto slc = s->add_vertex_class("statements.StatementListContainer", true);
  auto expr_stmt = s->add_vertex_class("statements.ExpressionStatement", false);
  auto switch_stmt = s->add_vertex_class("statements.Switch", false);
  auto case_block = s->add_vertex_class("statements.Case", false);
  auto catch_block = s->add_vertex_class("statements.CatchBlock", false);

  s->add_specialization(method, member);
  s->add_specialization(method, slc);
  s->add_specialization(enum_constant, member);
  s->add_specialization(mod_abstract, modifier);
  s->add_specialization(mod_public, modifier);
  s->add_specialization(expr_stmt, statement);
  s->add_specialization(switch_stmt, statement);
  s->add_specialization(case_block, slc);
  s->add_specialization(catch_block, statement);
  s->add_specialization(catch_block, slc);

  s->add_attribute(cls, "name", Domain::String, std::nullopt);
  s->add_attribute(enumeration, "name", Domain::String, std::nullopt);
  s->add_attribute(method, "name", Domain::String, std::nullopt);
  s->add_attribute(enum_constant, "name", Domain::String, std::nullopt);

  s->add_edge_class("classifiers.ClassExtends", cls, ncr, "", "extends", EdgeKind::Containment);
  s->add_edge_class("types.ReferenceParts", ncr, cr, "", "classifierReferences",
                    EdgeKind::Containment);
  s->add_edge_class("types.ReferenceTarget", cr, cls, "", "target", EdgeKind::Plain);
  s->add_edge_class("classifiers.ClassModifiers", cls, modifier, "", "annotationsAndModifiers",
                    EdgeKind::Containment);
  s->add_edge_class("classifiers.ClassMembers", cls, member, "", "members",
                    EdgeKind::Containment);
  s->add_edge_class("classifiers.EnumerationConstants", enumeration, enum_constant, "", "members",
                    EdgeKind::Containment);
  s->add_edge_class("statements.ContainerStatements", slc, statement, "", "statements",
                    EdgeKind::Containment);
  s->add_edge_class("statements.StatementExpression", expr_stmt, call, "", "expression",
                    EdgeKind::Containment);
  s->add_edge_class("statements.SwitchCases", switch_stmt, case_block, "", "cases",
                    EdgeKind::Containment);
  s->add_edge_class("statements.CaseCondition", case_block, ident_ref, "", "condition",
                    EdgeKind::Containment);
  s->add_edge_class("statements.CatchParameter", catch_block, parameter, "", "parameter",
                    EdgeKind::Containment);
  s->add_edge_class("members.ParameterType", parameter, ncr, "", "typeReference",
                    EdgeKind::Containment);
  s->add_edge_class("references.CallChain", call, call, "", "next", EdgeKind::Containment);
  s->add_edge_class("references.CallArguments", call, arg_list, "", "arguments",
                    EdgeKind::Containment);
  s->add_edge_class("references.ArgumentChain", arg_list, argument, "", "next",
                    EdgeKind::Containment);
  s->add_edge_class("references.ArgumentTarget", argument, enum_constant, "", "target",
                    EdgeKind::Plain);
  s->add_edge_class("references.CallTarget", call, method, "", "target", EdgeKind::Plain);
  s->add_edge_class("references.IdentifierTarget", ident_ref, enum_constant, "", "target",
                    EdgeKind::Plain);
  return s;
}

namespace {

// Builds mini Java program graphs the way the original syntax trees shape
// them: classes own members, method bodies own statements, calls chain via
// `next`, references point at their targets.
class ProgramBuilder {
public:
  explicit ProgramBuilder(SchemaPtr schema)
      : schema_(std::move(schema)), graph_(std::make_unique<Graph>(schema_)) {
    cache_["Class"] = schema_->require_vertex_class("classifiers.Class");
    cache_["Enumeration"] = schema_->require_vertex_class("classifiers.Enumeration");
    cache_["NCR"] = schema_->require_vertex_class("types.NamespaceClassifierReference");
    cache_["CR"] = schema_->require_vertex_class("types.ClassifierReference");
    cache_["Method"] = schema_->require_vertex_class("members.Method");
    cache_["EnumConstant"] = schema_->require_vertex_class("members.EnumConstant");
    cache_["Parameter"] = schema_->require_vertex_class("members.Parameter");
    cache_["Abstract"] = schema_->require_vertex_class("modifiers.Abstract");
    cache_["Public"] = schema_->require_vertex_class("modifiers.Public");
    cache_["MethodCall"] = schema_->require_vertex_class("references.MethodCall");
    cache_["IdentifierReference"] = schema_->require_vertex_class("references.IdentifierReference");
    cache_["ArgumentList"] = schema_->require_vertex_class("references.ArgumentList");
    cache_["Argument"] = schema_->require_vertex_class("references.Argument");
    cache_["ExpressionStatement"] = schema_->require_vertex_class("statements.ExpressionStatement");
    cache_["Switch"] = schema_->require_vertex_class("statements.Switch");
    cache_["Case"] = schema_->require_vertex_class("statements.Case");
    cache_["CatchBlock"] = schema_->require_vertex_class("statements.CatchBlock");

    edges_["extends"] = schema_->require_edge_class("classifiers.ClassExtends");
    edges_["refParts"] = schema_->require_edge_class("types.ReferenceParts");
    edges_["refTarget"] = schema_->require_edge_class("types.ReferenceTarget");
    edges_["modifiers"] = schema_->require_edge_class("classifiers.ClassModifiers");
    edges_["members"] = schema_->require_edge_class("classifiers.ClassMembers");
    edges_["enumMembers"] = schema_->require_edge_class("classifiers.EnumerationConstants");
    edges_["statements"] = schema_->require_edge_class("statements.ContainerStatements");
    edges_["expression"] = schema_->require_edge_class("statements.StatementExpression");
    edges_["cases"] = schema_->require_edge_class("statements.SwitchCases");
    edges_["condition"] = schema_->require_edge_class("statements.CaseCondition");
    edges_["parameter"] = schema_->require_edge_class("statements.CatchParameter");
    edges_["typeReference"] = schema_->require_edge_class("members.ParameterType");
    edges_["callNext"] = schema_->require_edge_class("references.CallChain");
    edges_["arguments"] = schema_->require_edge_class("references.CallArguments");
    edges_["argNext"] = schema_->require_edge_class("references.ArgumentChain");
    edges_["argTarget"] = schema_->require_edge_class("references.ArgumentTarget");
    edges_["callTarget"] = schema_->require_edge_class("references.CallTarget");
    edges_["identTarget"] = schema_->require_edge_class("references.IdentifierTarget");
  }

  VertexId add_class(const std::string& name, bool is_abstract) {
    VertexId v = graph_->create_vertex(cache_["Class"]);
    graph_->set_attribute(v, "name", Value::string(name));
    VertexId modifier =
        graph_->create_vertex(is_abstract ? cache_["Abstract"] : cache_["Public"]);
    graph_->create_edge(edges_["modifiers"], v, modifier);
    return v;
  }

  // A class without modifiers at all (isEmpty filter sees an empty set).
  VertexId add_plain_class(const std::string& name) {
    VertexId v = graph_->create_vertex(cache_["Class"]);
    graph_->set_attribute(v, "name", Value::string(name));
    return v;
  }

  void set_extends(VertexId sub, VertexId super) {
    VertexId ncr = graph_->create_vertex(cache_["NCR"]);
    VertexId cr = graph_->create_vertex(cache_["CR"]);
    graph_->create_edge(edges_["extends"], sub, ncr);
    graph_->create_edge(edges_["refParts"], ncr, cr);
    graph_->create_edge(edges_["refTarget"], cr, super);
  }

  VertexId add_enum(const std::string& name) {
    VertexId v = graph_->create_vertex(cache_["Enumeration"]);
    graph_->set_attribute(v, "name", Value::string(name));
    return v;
  }

  VertexId add_enum_constant(VertexId enumeration, const std::string& name) {
    VertexId c = graph_->create_vertex(cache_["EnumConstant"]);
    graph_->set_attribute(c, "name", Value::string(name));
    graph_->create_edge(edges_["enumMembers"], enumeration, c);
    return c;
  }

  VertexId add_method(VertexId owner, const std::string& name) {
    VertexId m = graph_->create_vertex(cache_["Method"]);
    graph_->set_attribute(m, "name", Value::string(name));
    graph_->create_edge(edges_["members"], owner, m);
    return m;
  }

  VertexId add_switch(VertexId container) {
    VertexId sw = graph_->create_vertex(cache_["Switch"]);
    graph_->create_edge(edges_["statements"], container, sw);
    return sw;
  }

  VertexId add_case(VertexId switch_stmt, VertexId enum_constant) {
    VertexId c = graph_->create_vertex(cache_["Case"]);
    graph_->create_edge(edges_["cases"], switch_stmt, c);
    VertexId ref = graph_->create_vertex(cache_["IdentifierReference"]);
    graph_->create_edge(edges_["condition"], c, ref);
    graph_->create_edge(edges_["identTarget"], ref, enum_constant);
    return c;
  }

  VertexId add_catch(VertexId container, VertexId exception_class) {
    VertexId cb = graph_->create_vertex(cache_["CatchBlock"]);
    graph_->create_edge(edges_["statements"], container, cb);
    VertexId param = graph_->create_vertex(cache_["Parameter"]);
    graph_->create_edge(edges_["parameter"], cb, param);
    VertexId ncr = graph_->create_vertex(cache_["NCR"]);
    VertexId cr = graph_->create_vertex(cache_["CR"]);
    graph_->create_edge(edges_["typeReference"], param, ncr);
    graph_->create_edge(edges_["refParts"], ncr, cr);
    graph_->create_edge(edges_["refTarget"], cr, exception_class);
    return cb;
  }

  // `Other.Instance().activate();` inside the container's statement list.
  void add_activation(VertexId container, VertexId instance_method, VertexId activate_method) {
    VertexId stmt = graph_->create_vertex(cache_["ExpressionStatement"]);
    graph_->create_edge(edges_["statements"], container, stmt);
    VertexId instance_call = graph_->create_vertex(cache_["MethodCall"]);
    graph_->create_edge(edges_["expression"], stmt, instance_call);
    graph_->create_edge(edges_["callTarget"], instance_call, instance_method);
    VertexId activate_call = graph_->create_vertex(cache_["MethodCall"]);
    graph_->create_edge(edges_["callNext"], instance_call, activate_call);
    graph_->create_edge(edges_["callTarget"], activate_call, activate_method);
  }

  // `send(CONSTANT);` inside the container's statement list.
  void add_send(VertexId container, VertexId send_method, VertexId enum_constant) {
    VertexId stmt = graph_->create_vertex(cache_["ExpressionStatement"]);
    graph_->create_edge(edges_["statements"], container, stmt);
    VertexId send_call = graph_->create_vertex(cache_["MethodCall"]);
    graph_->create_edge(edges_["expression"], stmt, send_call);
    graph_->create_edge(edges_["callTarget"], send_call, send_method);
    VertexId args = graph_->create_vertex(cache_["ArgumentList"]);
    graph_->create_edge(edges_["arguments"], send_call, args);
    VertexId arg = graph_->create_vertex(cache_["Argument"]);
    graph_->create_edge(edges_["argNext"], args, arg);
    graph_->create_edge(edges_["argTarget"], arg, enum_constant);
  }

  GraphPtr take() { return std::move(graph_); }
  SchemaPtr schema() { return schema_; }

private:
  SchemaPtr schema_;
  GraphPtr graph_;
  std::map<std::string, VertexClassId> cache_;
  std::map<std::string, EdgeClassId> edges_;
};

Fixture finish(ProgramBuilder& b, FixtureManifest manifest) {
  Fixture f;
  f.schema = b.schema();
  f.graph = b.take();
  f.graph->validate();
  manifest.source_vertex_count = f.graph->vertex_count();
  manifest.source_edge_count = f.graph->edge_count();
  f.manifest = std::move(manifest);
  return f;
}

// Turnstile: Locked/Unlocked under abstract State. Locked.run() switches on
// COIN and recovers from a jam in a catch block; Unlocked.run() handles PUSH
// (sounding the horn first) and Unlocked.reset() forces the lock.
Fixture build_fixture_a() {
  ProgramBuilder b(mini_java_schema());
  VertexId state = b.add_class("State", true);
  VertexId locked = b.add_class("Locked", false);
  VertexId unlocked = b.add_class("Unlocked", false);
  VertexId exception = b.add_class("Exception", false);
  b.set_extends(locked, state);
  b.set_extends(unlocked, state);

  VertexId activate = b.add_method(state, "activate");
  VertexId send = b.add_method(state, "send");

  VertexId locked_instance = b.add_method(locked, "Instance");
  VertexId locked_run = b.add_method(locked, "run");
  VertexId unlocked_instance = b.add_method(unlocked, "Instance");
  VertexId unlocked_run = b.add_method(unlocked, "run");
  VertexId unlocked_reset = b.add_method(unlocked, "reset");

  VertexId event = b.add_enum("Event");
  VertexId coin = b.add_enum_constant(event, "COIN");
  VertexId push = b.add_enum_constant(event, "PUSH");
  VertexId horn = b.add_enum_constant(event, "HORN");

  // Locked.run: switch (event) { case COIN: Unlocked.Instance().activate(); }
  //             plus catch (Exception e) { Locked.Instance().activate(); }
  VertexId locked_switch = b.add_switch(locked_run);
  VertexId case_coin = b.add_case(locked_switch, coin);
  b.add_activation(case_coin, unlocked_instance, activate);
  VertexId catch_jam = b.add_catch(locked_run, exception);
  b.add_activation(catch_jam, locked_instance, activate);

  // Unlocked.run: switch (event) { case PUSH: send(HORN);
  //                                           Locked.Instance().activate(); }
  VertexId unlocked_switch = b.add_switch(unlocked_run);
  VertexId case_push = b.add_case(unlocked_switch, push);
  b.add_send(case_push, send, horn);
  b.add_activation(case_push, locked_instance, activate);

  // Unlocked.reset: Locked.Instance().activate();
  b.add_activation(unlocked_reset, locked_instance, activate);

  FixtureManifest m;
  m.id = "A";
  m.source_file = "A.graph";
  m.golden_file = "A.golden.graph";
  m.state_names = {"Locked", "Unlocked"};
  m.transitions = {
      {"Locked", "Unlocked", "COIN", "--"},
      {"Locked", "Locked", "Exception", "--"},
      {"Unlocked", "Locked", "PUSH", "HORN"},
      {"Unlocked", "Locked", "reset", "--"},
  };
  return finish(b, std::move(m));
}

// Indirect subclassing: Idle extends abstract AbstractIdle extends State, so
// only the one-or-many iteration over the extends path finds it; the abstract
// intermediate is filtered out. Idle.run() activates Running with no
// surrounding switch or catch, leaving the default trigger.
Fixture build_fixture_b() {
  ProgramBuilder b(mini_java_schema());
  VertexId state = b.add_class("State", true);
  VertexId abstract_idle = b.add_class("AbstractIdle", true);
  VertexId idle = b.add_class("Idle", false);
  VertexId running = b.add_plain_class("Running");
  b.set_extends(abstract_idle, state);
  b.set_extends(idle, abstract_idle);
  b.set_extends(running, state);

  VertexId activate = b.add_method(state, "activate");

  VertexId idle_instance = b.add_method(idle, "Instance");
  VertexId idle_run = b.add_method(idle, "run");
  VertexId running_instance = b.add_method(running, "Instance");
  VertexId running_stop = b.add_method(running, "stop");

  b.add_activation(idle_run, running_instance, activate);
  b.add_activation(running_stop, idle_instance, activate);

  FixtureManifest m;
  m.id = "B";
  m.source_file = "B.graph";
  m.golden_file = "B.golden.graph";
  m.state_names = {"Idle", "Running"};
  m.transitions = {
      {"Idle", "Running", "--", "--"},
      {"Running", "Idle", "stop", "--"},
  };
  return finish(b, std::move(m));
}

// Degenerate: a State hierarchy whose methods never activate anything.
Fixture build_fixture_c() {
  ProgramBuilder b(mini_java_schema());
  VertexId state = b.add_class("State", true);
  VertexId solo = b.add_class("Solo", false);
  VertexId wandering = b.add_class("Wandering", false);
  b.set_extends(solo, state);
  b.set_extends(wandering, state);

  b.add_method(state, "activate");
  b.add_method(solo, "Instance");
  b.add_method(solo, "run");
  b.add_method(wandering, "Instance");

  FixtureManifest m;
  m.id = "C";
  m.source_file = "C.graph";
  m.golden_file = "C.golden.graph";
  m.state_names = {"Solo", "Wandering"};
  m.transitions = {};
  return finish(b, std::move(m));
}

}  // namespace

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  out.push_back(build_fixture_a());
  out.push_back(build_fixture_b());
  out.push_back(build_fixture_c());
  return out;
}

Fixture build_fixture(const std::string& id) {
  if (id == "A") return build_fixture_a();
  if (id == "B") return build_fixture_b();
  if (id == "C") return build_fixture_c();
  throw GretlError(ErrorKind::IoError, "no fixture named '" + id + "'");
}

Fixture build_negative_two_state_classes() {
  ProgramBuilder b(mini_java_schema());
  b.add_class("State", true);
  b.add_class("State", true);

  FixtureManifest m;
  m.id = "neg_two_state_classes";
  m.source_file = "neg_two_state_classes.graph";
  return finish(b, std::move(m));
}

const std::string& reference_transformation() {
  static const std::string text = R"gretl(import classifiers.*; import types.*;      import members.*;
import references.*;  import statements.*; import modifiers.*;

abstractStateClass := theElement(from c: V{Class}
                                 with c.name = "State" reportSet c end);

CreateVertexClass State
  <== from c: {Class} & (<>--{extends} <>--{classifierReferences} -->{target})+
                         abstractStateClass
      with isEmpty(c <>--{annotationsAndModifiers} & {Abstract})
      reportSet c end;

CreateAttribute State.name : String
  <== from c: keySet(img_State) reportMap c -> c.name end;

CreateEdgeClass Transition from State role src to State role dst
  <== from c1, c2: keySet(img_State),
           callingMethod: c1 <>--{members} & {Method},
           call: callingMethod <>--+ & {MethodCall}
      with call -->{target} instanceMethod
        and not isEmpty(call <>--{next} & {MethodCall} -->{target}
                        & {Method @ thisVertex.name = "activate"})
      reportSet tup(c1, callingMethod, c2, instanceMethod), c1, c2 end
      where instanceMethod := theElement(c2 <>--{members}
                                & {Method @ thisVertex.name = "Instance"});

CreateAttribute Transition.trigger : String = '"--"'
  <== from t: keySet(img_Transition)
      with t[1].name <> "run"
      reportMap t -> t[1].name end;

SetAttributes Transition.trigger
  <== from t: keySet(img_Transition),
           case: t[1] <>--+ & {Switch}<>--{cases},
           cond: case <>--{condition} -->{target} & {EnumConstant}
      with t[1].name = "run" and case <>--+ & {MethodCall} -->{target} t[3]
      reportMap t -> cond.name end;

SetAttributes Transition.trigger
  <== from t: keySet(img_Transition), catch: t[1] <>--+ & {CatchBlock}
      with t[1].name = "run" and catch <>--+ & {MethodCall} -->{target} t[3]
      reportMap t -> theElement(catch -->{parameter} -->{typeReference}
                                  -->{classifierReferences} -->{target}).name end;

CreateAttribute Transition.action : String = '"--"'
  <== from t: keySet(img_Transition),
           container: t[1] <>--* & {StatementListContainer},
           sendCall: container <>--{statements} <>--{expression} & {MethodCall}
      with not isEmpty(sendCall -->{target} & {Method @ thisVertex.name = "send"})
        and container <>--{statements} <>--{expression}
                      -->{next}* & {MethodCall}-->{target} t[3]
      reportMap t -> theElement(sendCall <>--{arguments}
                                         <>--{next} -->{target}).name end;
)gretl";
  return text;
}

LoadedGraph golden_target(const FixtureManifest& manifest) {
  LoadedGraph out;
  out.schema = std::make_shared<Schema>("Target");
  auto state = out.schema->add_vertex_class("State", false);
  out.schema->add_attribute(state, "name", Domain::String, std::nullopt);
  auto transition =
      out.schema->add_edge_class("Transition", state, state, "src", "dst", EdgeKind::Plain);
  out.schema->add_attribute(transition, "trigger", Domain::String, Value::string("--"));
  out.schema->add_attribute(transition, "action", Domain::String, Value::string("--"));

  out.graph = std::make_unique<Graph>(out.schema);
  std::map<std::string, VertexId> by_name;
  for (const auto& name : manifest.state_names) {
    VertexId v = out.graph->create_vertex(state);
    out.graph->set_attribute(v, "name", Value::string(name));
    by_name[name] = v;
  }
  for (const auto& t : manifest.transitions) {
    EdgeId e = out.graph->create_edge(transition, by_name.at(t.src), by_name.at(t.dst));
    if (t.trigger != "--") out.graph->set_attribute(e, "trigger", Value::string(t.trigger));
    if (t.action != "--") out.graph->set_attribute(e, "action", Value::string(t.action));
  }
  return out;
}

std::string manifest_to_json(const FixtureManifest& manifest) {
  json j;
  j["id"] = manifest.id;
  j["source"] = manifest.source_file;
  j["golden"] = manifest.golden_file;
  j["states"] = manifest.state_names;
  json transitions = json::array();
  for (const auto& t : manifest.transitions)
    transitions.push_back(json{{"src", t.src}, {"dst", t.dst}, {"trigger", t.trigger},
                               {"action", t.action}});
  j["transitions"] = std::move(transitions);
  j["source_vertex_count"] = manifest.source_vertex_count;
  j["source_edge_count"] = manifest.source_edge_count;
  return j.dump(2) + "\n";
}

FixtureManifest manifest_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GretlError(ErrorKind::ParseError, std::string("manifest malformed: ") + e.what());
  }
  FixtureManifest m;
  try {
    m.id = j.at("id").get<std::string>();
    m.source_file = j.at("source").get<std::string>();
    m.golden_file = j.at("golden").get<std::string>();
    m.state_names = j.at("states").get<std::vector<std::string>>();
    for (const auto& t : j.at("transitions"))
      m.transitions.push_back({t.at("src").get<std::string>(), t.at("dst").get<std::string>(),
                               t.at("trigger").get<std::string>(),
                               t.at("action").get<std::string>()});
    m.source_vertex_count = j.at("source_vertex_count").get<size_t>();
    m.source_edge_count = j.at("source_edge_count").get<size_t>();
  } catch (const json::exception& e) {
    throw GretlError(ErrorKind::ParseError, std::string("manifest malformed: ") + e.what());
  }
  return m;
}

namespace {

std::string attribute_signature(const Graph& g, VertexId v) {
  const auto& schema = g.schema();
  std::string sig = Schema::simple_name_of(schema.vertex_class(g.vertex(v).cls).qualified_name);
  sig += "{";
  bool first = true;
  for (const auto& attr : schema.visible_attributes(g.vertex(v).cls)) {
    if (!first) sig += ",";
    first = false;
    sig += attr.name + "=" + g.get_attribute(v, attr.name).render();
  }
  return sig + "}";
}

std::string edge_signature(const Graph& g, EdgeId e) {
  const auto& schema = g.schema();
  const auto& edge = g.edge(e);
  std::string sig = Schema::simple_name_of(schema.edge_class(edge.cls).qualified_name);
  sig += "(" + attribute_signature(g, edge.from) + " -> " + attribute_signature(g, edge.to) + ")";
  sig += "{";
  bool first = true;
  for (const auto& attr : schema.visible_attributes(edge.cls)) {
    if (!first) sig += ",";
    first = false;
    sig += attr.name + "=" + g.get_attribute(e, attr.name).render();
  }
  return sig + "}";
}

void diff_multisets(std::vector<std::string> actual, std::vector<std::string> expected,
                    const std::string& what, std::vector<std::string>& diffs) {
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  std::vector<std::string> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  for (const auto& m : missing) diffs.push_back("missing " + what + " " + m);
  for (const auto& e : extra) diffs.push_back("unexpected " + what + " " + e);
}

std::string attr_def_signature(const AttributeDef& a) {
  std::string sig = a.name + ":" + domain_name(a.domain);
  if (a.default_value) sig += "=" + a.default_value->render();
  return sig;
}

void diff_schemas(const Schema& actual, const Schema& expected, std::vector<std::string>& diffs) {
  std::vector<std::string> a, b;
  for (uint32_t i = 0; i < actual.vertex_class_count(); ++i) {
    const auto& c = actual.vertex_class(VertexClassId{i});
    std::string sig = c.qualified_name + (c.is_abstract ? "(abstract)" : "");
    for (const auto& attr : actual.visible_attributes(VertexClassId{i}))
      sig += " " + attr_def_signature(attr);
    a.push_back(sig);
  }
  for (uint32_t i = 0; i < expected.vertex_class_count(); ++i) {
    const auto& c = expected.vertex_class(VertexClassId{i});
    std::string sig = c.qualified_name + (c.is_abstract ? "(abstract)" : "");
    for (const auto& attr : expected.visible_attributes(VertexClassId{i}))
      sig += " " + attr_def_signature(attr);
    b.push_back(sig);
  }
  diff_multisets(std::move(a), std::move(b), "vertex class", diffs);

  a.clear();
  b.clear();
  auto edge_sig = [](const Schema& s, uint32_t i) {
    const auto& c = s.edge_class(EdgeClassId{i});
    std::string sig = c.qualified_name + " " + s.vertex_class(c.from_class).qualified_name +
                      "(" + c.from_role + ")->" + s.vertex_class(c.to_class).qualified_name +
                      "(" + c.to_role + ")" +
                      (c.kind == EdgeKind::Containment ? " containment" : " plain");
    sig += " [" + std::to_string(c.from_multiplicity.min) + "," +
           (c.from_multiplicity.max ? std::to_string(*c.from_multiplicity.max) : "*") + "]";
    sig += "[" + std::to_string(c.to_multiplicity.min) + "," +
           (c.to_multiplicity.max ? std::to_string(*c.to_multiplicity.max) : "*") + "]";
    for (const auto& attr : s.visible_attributes(EdgeClassId{i}))
      sig += " " + attr_def_signature(attr);
    return sig;
  };
  for (uint32_t i = 0; i < actual.edge_class_count(); ++i) a.push_back(edge_sig(actual, i));
  for (uint32_t i = 0; i < expected.edge_class_count(); ++i) b.push_back(edge_sig(expected, i));
  diff_multisets(std::move(a), std::move(b), "edge class", diffs);
}

}  // namespace

std::vector<std::string> diff_graphs(const Graph& actual, const Graph& expected) {
  std::vector<std::string> diffs;
  diff_schemas(actual.schema(), expected.schema(), diffs);

  std::vector<std::string> a, b;
  for (uint32_t i = 0; i < actual.vertex_count(); ++i)
    a.push_back(attribute_signature(actual, VertexId{i}));
  for (uint32_t i = 0; i < expected.vertex_count(); ++i)
    b.push_back(attribute_signature(expected, VertexId{i}));
  diff_multisets(std::move(a), std::move(b), "vertex", diffs);

  a.clear();
  b.clear();
  for (uint32_t i = 0; i < actual.edge_count(); ++i) a.push_back(edge_signature(actual, EdgeId{i}));
  for (uint32_t i = 0; i < expected.edge_count(); ++i)
    b.push_back(edge_signature(expected, EdgeId{i}));
  diff_multisets(std::move(a), std::move(b), "edge", diffs);
  return diffs;
}

CaseReport run_case(const Fixture& fixture) {
  CaseReport report;
  report.fixture_id = fixture.manifest.id;
  auto start = std::chrono::steady_clock::now();
  try {
    // Full text pipeline: serialize, load back, transform, serialize again.
    std::string source_doc = save_graph_to_string(*fixture.graph);
    LoadedGraph source = load_graph_from_string(source_doc);
    Transformation rules = parse_transformation(reference_transformation());
    ExecutionContext ctx = execute(rules, *source.graph);
    std::string target_doc = save_graph_to_string(*ctx.target);
    LoadedGraph golden = golden_target(fixture.manifest);
    LoadedGraph target = load_graph_from_string(target_doc);
    report.diffs = diff_graphs(*target.graph, *golden.graph);
    report.pass = report.diffs.empty();
  } catch (const GretlError& e) {
    report.pass = false;
    report.diffs.push_back(e.error_line());
  }
  auto end = std::chrono::steady_clock::now();
  report.millis = std::chrono::duration<double, std::milli>(end - start).count();
  return report;
}

}  // namespace gretl
