// SPDX-License-Identifier: Apache-2.0
#include "gretl/eval.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace gretl {

namespace {

[[noreturn]] void type_error(const std::string& msg, SourceLoc loc) {
  throw GretlError(ErrorKind::TypeError, msg, loc);
}

// --- path evaluation ---------------------------------------------------------
//
// Thompson construction over three transition flavours: epsilon, an edge step
// consuming one graph edge, and a guard that filters the current vertex.
// Matching runs a BFS over (nfa state, vertex) pairs.

struct NfaTransition {
  enum Kind { Epsilon, Step, Guard } kind = Epsilon;
  int target = 0;
  const EdgeStep* step = nullptr;
  const VertexRestriction* guard = nullptr;
  std::vector<VertexClassId> guard_types;  // resolved from guard->types
};

struct Nfa {
  std::vector<std::vector<NfaTransition>> states;
  int start = 0;
  int accept = 0;

  int add_state() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
  void add_epsilon(int from, int to) { states[from].push_back({NfaTransition::Epsilon, to, nullptr, nullptr, {}}); }
};

struct Fragment {
  int in = 0;
  int out = 0;
};

Fragment compile_elem(const PathElem& elem, Nfa& nfa, Environment& env);

Fragment compile_sequence(const PathSequence& seq, Nfa& nfa, Environment& env) {
  Fragment frag;
  frag.in = nfa.add_state();
  int current = frag.in;
  for (const auto& elem : seq.elems) {
    Fragment inner = compile_elem(*elem, nfa, env);
    nfa.add_epsilon(current, inner.in);
    current = inner.out;
  }
  frag.out = current;
  return frag;
}

Fragment compile_elem(const PathElem& elem, Nfa& nfa, Environment& env) {
  if (const auto* step = std::get_if<EdgeStep>(&elem.node)) {
    Fragment f{nfa.add_state(), nfa.add_state()};
    nfa.states[f.in].push_back({NfaTransition::Step, f.out, step, nullptr, {}});
    return f;
  }
  if (const auto* restr = std::get_if<VertexRestriction>(&elem.node)) {
    Fragment f{nfa.add_state(), nfa.add_state()};
    NfaTransition t{NfaTransition::Guard, f.out, nullptr, restr, {}};
    for (const auto& type_name : restr->types)
      t.guard_types.push_back(resolve_vertex_type(type_name, env.imports(), env.graph().schema()));
    nfa.states[f.in].push_back(std::move(t));
    return f;
  }
  if (const auto* seq = std::get_if<PathSequence>(&elem.node))
    return compile_sequence(*seq, nfa, env);
  const auto& iter = std::get<PathIteration>(elem.node);
  Fragment body = compile_elem(*iter.body, nfa, env);
  Fragment f{nfa.add_state(), nfa.add_state()};
  nfa.add_epsilon(f.in, body.in);
  nfa.add_epsilon(body.out, f.out);
  nfa.add_epsilon(body.out, body.in);  // repeat
  if (!iter.one_or_more) nfa.add_epsilon(f.in, f.out);  // star skips the body
  return f;
}

bool guard_passes(const NfaTransition& t, VertexId v, Environment& env) {
  const Graph& g = env.graph();
  if (!t.guard_types.empty()) {
    bool any = false;
    for (auto cls : t.guard_types)
      if (g.is_instance_of(v, cls)) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  if (t.guard->predicate) {
    env.push("thisVertex", Value::vertex(&g, v.index));
    Value result = eval(t.guard->predicate, env);
    env.pop();
    if (!result.is_boolean())
      type_error("restriction predicate must evaluate to a boolean",
                 t.guard->predicate->loc);
    return result.as_boolean();
  }
  return true;
}

bool step_matches(const EdgeStep& step, const EdgeClass& ec) {
  if (step.containment_only && ec.kind != EdgeKind::Containment) return false;
  if (step.role && ec.to_role != *step.role) return false;
  return true;
}

}  // namespace

std::vector<VertexId> eval_path(const std::vector<VertexId>& start, const PathExpr& path,
                                Environment& env) {
  const Graph& g = env.graph();
  Nfa nfa;
  Fragment frag = compile_sequence(path, nfa, env);
  nfa.start = frag.in;
  nfa.accept = frag.out;

  const size_t n_states = nfa.states.size();
  const size_t n_vertices = g.vertex_count();
  std::vector<bool> visited(n_states * n_vertices, false);
  auto slot = [&](int state, VertexId v) { return state * n_vertices + v.index; };

  std::deque<std::pair<int, VertexId>> work;
  for (VertexId v : start) {
    if (v.index >= n_vertices) continue;
    if (!visited[slot(nfa.start, v)]) {
      visited[slot(nfa.start, v)] = true;
      work.push_back({nfa.start, v});
    }
  }
  while (!work.empty()) {
    auto [state, v] = work.front();
    work.pop_front();
    for (const auto& t : nfa.states[state]) {
      switch (t.kind) {
        case NfaTransition::Epsilon:
          if (!visited[slot(t.target, v)]) {
            visited[slot(t.target, v)] = true;
            work.push_back({t.target, v});
          }
          break;
        case NfaTransition::Guard:
          if (!visited[slot(t.target, v)] && guard_passes(t, v, env)) {
            visited[slot(t.target, v)] = true;
            work.push_back({t.target, v});
          }
          break;
        case NfaTransition::Step:
          for (EdgeId e : g.out_edges(v)) {
            const Edge& edge = g.edge(e);
            if (!step_matches(*t.step, g.schema().edge_class(edge.cls))) continue;
            if (!visited[slot(t.target, edge.to)]) {
              visited[slot(t.target, edge.to)] = true;
              work.push_back({t.target, edge.to});
            }
          }
          break;
      }
    }
  }

  std::vector<VertexId> out;
  for (uint32_t i = 0; i < n_vertices; ++i)
    if (visited[slot(nfa.accept, VertexId{i})]) out.push_back(VertexId{i});
  return out;  // ascending creation order
}

bool eval_path_exists(VertexId start, const PathExpr& path, VertexId end, Environment& env) {
  auto reached = eval_path({start}, path, env);
  return std::any_of(reached.begin(), reached.end(),
                     [&](VertexId v) { return v == end; });
}

VertexClassId resolve_vertex_type(const std::string& name,
                                  const std::vector<std::string>& imports,
                                  const Schema& schema) {
  if (name.find('.') != std::string::npos) {
    auto id = schema.find_vertex_class(name);
    if (!id)
      throw GretlError(ErrorKind::UnknownType, "no vertex class named '" + name + "'");
    return *id;
  }
  std::vector<VertexClassId> candidates;
  if (auto id = schema.find_vertex_class(name)) candidates.push_back(*id);  // default package
  for (const auto& pkg : imports)
    if (auto id = schema.find_vertex_class(pkg + "." + name)) candidates.push_back(*id);
  if (candidates.empty())
    throw GretlError(ErrorKind::UnknownType,
                     "type '" + name + "' is not declared by any imported package");
  if (candidates.size() > 1)
    throw GretlError(ErrorKind::AmbiguousType,
                     "type '" + name + "' is declared by more than one imported package");
  return candidates.front();
}

// --- builtins ----------------------------------------------------------------

Value builtin_the_element(const Value& v) {
  if (!v.is_set())
    throw GretlError(ErrorKind::NotACollection, "theElement expects a set");
  const auto& items = v.as_set().items();
  if (items.size() != 1)
    throw GretlError(ErrorKind::NotSingleton, "theElement of a collection of size " +
                                                  std::to_string(items.size()));
  return items.front();
}

Value builtin_is_empty(const Value& v) {
  if (v.is_set()) return Value::boolean(v.as_set().empty());
  if (v.is_map()) return Value::boolean(v.as_map().empty());
  throw GretlError(ErrorKind::TypeError, "isEmpty expects a set or a map");
}

Value builtin_key_set(const Value& v) {
  if (!v.is_map()) throw GretlError(ErrorKind::TypeError, "keySet expects a map");
  SetValue keys;
  for (const auto& [k, _] : v.as_map().entries()) keys.insert(k);
  return Value::set(std::move(keys));
}

Value builtin_tup(std::vector<Value> items) {
  if (items.empty()) throw GretlError(ErrorKind::TypeError, "tup expects at least one argument");
  return Value::tuple(std::move(items));
}

// --- expression evaluation ---------------------------------------------------

Value Environment::lookup(const std::string& name, SourceLoc loc) const {
  for (auto it = locals_.rbegin(); it != locals_.rend(); ++it)
    if (it->first == name) return it->second;
  if (globals_) {
    auto it = globals_->find(name);
    if (it != globals_->end()) return it->second;
  }
  if (name.rfind("img_", 0) == 0) {
    std::string cls = name.substr(4);
    if (trace_ && trace_->has_map(cls)) return Value::map(trace_->img(cls));
    throw GretlError(ErrorKind::UnknownTraceMap,
                     "img_" + cls + " does not exist (yet)", loc);
  }
  throw GretlError(ErrorKind::UnboundVariable, "variable '" + name + "' is not bound", loc);
}

namespace {

bool values_equal_for_compare(const Value& a, const Value& b, bool* any_undefined) {
  *any_undefined = a.is_undefined() || b.is_undefined();
  return a == b;
}

std::vector<VertexId> to_start_set(const Value& v, const Graph*& graph, SourceLoc loc) {
  std::vector<VertexId> out;
  if (v.is_vertex()) {
    graph = v.as_vertex().graph;
    out.push_back(VertexId{v.as_vertex().index});
    return out;
  }
  if (v.is_set()) {
    for (const auto& item : v.as_set().items()) {
      if (!item.is_vertex())
        type_error("path start set must contain only vertices", loc);
      if (!graph) graph = item.as_vertex().graph;
      if (graph != item.as_vertex().graph)
        type_error("path start vertices must belong to one graph", loc);
      out.push_back(VertexId{item.as_vertex().index});
    }
    return out;
  }
  type_error("path application needs a vertex or a vertex set on its left", loc);
}

VertexId to_anchor_vertex(const Value& v, const Graph*& graph, SourceLoc loc) {
  if (!v.is_vertex()) type_error("path target must be a single vertex", loc);
  if (!graph) graph = v.as_vertex().graph;
  if (graph != v.as_vertex().graph)
    type_error("path endpoints must belong to one graph", loc);
  return VertexId{v.as_vertex().index};
}

Value eval_path_application(const PathApplication& app, Environment& env, SourceLoc loc) {
  const Graph* graph = nullptr;
  std::vector<VertexId> start;
  std::optional<VertexId> anchor;
  if (app.start) start = to_start_set(eval(app.start, env), graph, app.start->loc);
  if (app.anchor) anchor = to_anchor_vertex(eval(app.anchor, env), graph, app.anchor->loc);
  if (!app.start && !app.anchor)
    type_error("path expression needs a start vertex or a target vertex", loc);
  if (!graph) graph = &env.graph();

  // The walk runs on the graph the operand vertices live in, which is the
  // environment's graph for every query the engine executes.
  Environment* e = &env;
  Environment local(*graph, env.imports(), nullptr, env.trace());
  if (graph != &env.graph()) e = &local;

  if (app.start && !app.anchor) {
    SetValue result;
    for (VertexId v : eval_path(start, app.path, *e))
      result.insert(Value::vertex(graph, v.index));
    return Value::set(std::move(result));
  }
  if (app.start && app.anchor) {
    for (VertexId v : eval_path(start, app.path, *e))
      if (v == *anchor) return Value::boolean(true);
    return Value::boolean(false);
  }
  // Backward image: all vertices from which the path reaches the anchor.
  SetValue result;
  for (uint32_t i = 0; i < graph->vertex_count(); ++i)
    if (eval_path_exists(VertexId{i}, app.path, *anchor, *e))
      result.insert(Value::vertex(graph, i));
  return Value::set(std::move(result));
}

Value eval_comprehension(const Comprehension& comp, Environment& env, SourceLoc loc);

Value eval_function_call(const FunctionCall& call, Environment& env, SourceLoc loc) {
  std::vector<Value> args;
  args.reserve(call.args.size());
  for (const auto& a : call.args) args.push_back(eval(a, env));
  auto arity = [&](size_t n) {
    if (args.size() != n)
      type_error(call.name + " expects " + std::to_string(n) + " argument(s)", loc);
  };
  try {
    if (call.name == "theElement") {
      arity(1);
      return builtin_the_element(args[0]);
    }
    if (call.name == "isEmpty") {
      arity(1);
      return builtin_is_empty(args[0]);
    }
    if (call.name == "keySet") {
      arity(1);
      return builtin_key_set(args[0]);
    }
    if (call.name == "tup") return builtin_tup(std::move(args));
  } catch (GretlError& e) {
    e.set_location(loc);
    throw;
  }
  type_error("unknown function '" + call.name + "'", loc);
}

}  // namespace

Value eval(const QueryAst& ast, Environment& env) {
  const Expr& e = *ast;
  if (const auto* var = std::get_if<VarRef>(&e.node)) return env.lookup(var->name, e.loc);
  if (const auto* s = std::get_if<StringLit>(&e.node)) return Value::string(s->value);
  if (const auto* i = std::get_if<IntLit>(&e.node)) return Value::integer(i->value);
  if (const auto* b = std::get_if<BoolLit>(&e.node)) return Value::boolean(b->value);
  if (const auto* extent = std::get_if<ClassExtent>(&e.node)) {
    VertexClassId cls;
    try {
      cls = resolve_vertex_type(extent->type_name, env.imports(), env.graph().schema());
    } catch (GretlError& err) {
      err.set_location(e.loc);
      throw;
    }
    SetValue out;
    for (VertexId v : env.graph().vertices_of_type(cls))
      out.insert(Value::vertex(&env.graph(), v.index));
    return Value::set(std::move(out));
  }
  if (const auto* access = std::get_if<AttrAccess>(&e.node)) {
    Value base = eval(access->base, env);
    try {
      if (base.is_vertex()) {
        const auto& ref = base.as_vertex();
        return ref.graph->get_attribute(VertexId{ref.index}, access->attribute);
      }
      if (base.is_edge()) {
        const auto& ref = base.as_edge();
        return ref.graph->get_attribute(EdgeId{ref.index}, access->attribute);
      }
    } catch (GretlError& err) {
      err.set_location(e.loc);
      throw;
    }
    type_error("attribute access on a non-element value", e.loc);
  }
  if (const auto* index = std::get_if<IndexAccess>(&e.node)) {
    Value base = eval(index->base, env);
    if (!base.is_tuple()) type_error("indexing a non-tuple value", e.loc);
    const auto& items = base.as_tuple().items;
    if (index->index < 0 || static_cast<size_t>(index->index) >= items.size())
      type_error("tuple index " + std::to_string(index->index) + " out of range for size " +
                     std::to_string(items.size()),
                 e.loc);
    return items[static_cast<size_t>(index->index)];
  }
  if (const auto* call = std::get_if<FunctionCall>(&e.node))
    return eval_function_call(*call, env, e.loc);
  if (const auto* neg = std::get_if<NotExpr>(&e.node)) {
    Value v = eval(neg->operand, env);
    if (!v.is_boolean()) type_error("'not' expects a boolean", e.loc);
    return Value::boolean(!v.as_boolean());
  }
  if (const auto* bin = std::get_if<BoolBinary>(&e.node)) {
    Value lhs = eval(bin->lhs, env);
    if (!lhs.is_boolean())
      type_error(bin->is_and ? "'and' expects booleans" : "'or' expects booleans", e.loc);
    if (bin->is_and && !lhs.as_boolean()) return Value::boolean(false);
    if (!bin->is_and && lhs.as_boolean()) return Value::boolean(true);
    Value rhs = eval(bin->rhs, env);
    if (!rhs.is_boolean())
      type_error(bin->is_and ? "'and' expects booleans" : "'or' expects booleans", e.loc);
    return rhs;
  }
  if (const auto* cmp = std::get_if<Comparison>(&e.node)) {
    Value lhs = eval(cmp->lhs, env);
    Value rhs = eval(cmp->rhs, env);
    // Comparisons against undefined fail the predicate instead of erroring.
    bool any_undefined = false;
    bool equal = values_equal_for_compare(lhs, rhs, &any_undefined);
    if (any_undefined) return Value::boolean(false);
    return Value::boolean(cmp->equal ? equal : !equal);
  }
  if (const auto* app = std::get_if<PathApplication>(&e.node))
    return eval_path_application(*app, env, e.loc);
  const auto& comp = std::get<Comprehension>(e.node);
  return eval_comprehension(comp, env, e.loc);
}

namespace {

Value eval_comprehension(const Comprehension& comp, Environment& env, SourceLoc loc) {
  SetValue result_set;
  MapValue result_map;

  // Nested-loop semantics: later domains may use earlier variables; a
  // multi-variable declaration iterates one domain evaluation per variable.
  std::function<void(size_t)> per_declaration = [&](size_t decl_idx) {
    if (decl_idx == comp.declarations.size()) {
      size_t base_depth = env.depth();
      // Where-bindings run once per combination, before the filter.
      for (const auto& binding : comp.where) env.push(binding.variable, eval(binding.expr, env));
      bool keep = true;
      if (comp.filter) {
        Value f = eval(comp.filter, env);
        if (!f.is_boolean())
          type_error("with-clause must evaluate to a boolean", comp.filter->loc);
        keep = f.as_boolean();
      }
      if (keep) {
        if (!comp.report.is_map) {
          if (comp.report.set_exprs.size() == 1) {
            result_set.insert(eval(comp.report.set_exprs[0], env));
          } else {
            std::vector<Value> items;
            items.reserve(comp.report.set_exprs.size());
            for (const auto& ex : comp.report.set_exprs) items.push_back(eval(ex, env));
            result_set.insert(Value::tuple(std::move(items)));
          }
        } else {
          Value key = eval(comp.report.key, env);
          Value value = eval(comp.report.value, env);
          if (!result_map.insert(key, value))
            throw GretlError(ErrorKind::MapKeyConflict,
                             "reportMap assigns conflicting values to key " + key.render(), loc);
        }
      }
      env.truncate(base_depth);
      return;
    }
    const auto& decl = comp.declarations[decl_idx];
    Value domain = eval(decl.domain, env);
    if (!domain.is_set())
      type_error("declaration domain must evaluate to a set", decl.domain->loc);
    const auto& items = domain.as_set().items();
    std::function<void(size_t)> per_variable = [&](size_t var_idx) {
      if (var_idx == decl.variables.size()) {
        per_declaration(decl_idx + 1);
        return;
      }
      for (const auto& item : items) {
        env.push(decl.variables[var_idx], item);
        per_variable(var_idx + 1);
        env.pop();
      }
    };
    per_variable(0);
  };
  per_declaration(0);

  return comp.report.is_map ? Value::map(std::move(result_map))
                            : Value::set(std::move(result_set));
}

}  // namespace

}  // namespace gretl
