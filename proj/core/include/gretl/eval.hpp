// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gretl/graph.hpp"
#include "gretl/query_ast.hpp"
#include "gretl/trace.hpp"
#include "gretl/value.hpp"

namespace gretl {

// Evaluation context. Lookup is lexical: locals (where-bindings shadow
// comprehension variables) over globals over the reserved img_<Class> names.
// Evaluation is read-only over the graph; concurrent evals on a frozen graph
// are safe.
class Environment {
public:
  Environment(const Graph& graph, std::vector<std::string> imports = {},
              const std::map<std::string, Value>* globals = nullptr,
              const TraceMaps* trace = nullptr)
      : graph_(&graph), imports_(std::move(imports)), globals_(globals), trace_(trace) {}

  const Graph& graph() const { return *graph_; }
  const std::vector<std::string>& imports() const { return imports_; }
  const TraceMaps* trace() const { return trace_; }

  // Throws UnboundVariable / UnknownTraceMap.
  Value lookup(const std::string& name, SourceLoc loc) const;

  void push(const std::string& name, Value v) { locals_.emplace_back(name, std::move(v)); }
  void pop(size_t n = 1) { locals_.resize(locals_.size() - n); }
  size_t depth() const { return locals_.size(); }
  void truncate(size_t depth) { locals_.resize(depth); }

private:
  const Graph* graph_;
  std::vector<std::string> imports_;
  const std::map<std::string, Value>* globals_;
  const TraceMaps* trace_;
  std::vector<std::pair<std::string, Value>> locals_;
};

Value eval(const QueryAst& ast, Environment& env);

// Forward image of a regular path expression: vertices reachable from any
// start vertex by a walk matching the path language.
std::vector<VertexId> eval_path(const std::vector<VertexId>& start, const PathExpr& path,
                                Environment& env);

bool eval_path_exists(VertexId start, const PathExpr& path, VertexId end, Environment& env);

// Import-based type resolution: qualified names resolve directly; unqualified
// ones must be declared by exactly one imported (or the default) package.
VertexClassId resolve_vertex_type(const std::string& name,
                                  const std::vector<std::string>& imports,
                                  const Schema& schema);

// Built-in functions, also callable directly.
Value builtin_the_element(const Value& v);
Value builtin_is_empty(const Value& v);
Value builtin_key_set(const Value& v);
Value builtin_tup(std::vector<Value> items);

}  // namespace gretl
