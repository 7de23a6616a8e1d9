// SPDX-License-Identifier: Apache-2.0
//
// Shared test machinery: a random schema/graph generator, a random path
// generator, and a relation-algebra reachability oracle that mirrors path
// semantics with boolean matrices instead of the engine's automaton walk.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gretl/eval.hpp"
#include "gretl/graph.hpp"
#include "gretl/query_ast.hpp"

namespace gretl::testing {

// Generator-level path description, lowered independently to (a) the engine
// AST and (b) the oracle's relations. Restriction predicates are limited to
// `thisVertex.name = <literal>` so the oracle can evaluate them directly.
struct RPath {
  enum class Kind { Step, Restrict, Seq, Iter } kind = Kind::Seq;
  // step
  bool containment = false;
  std::optional<std::string> role;
  // restrict
  std::vector<std::string> types;
  std::optional<std::string> name_equals;
  // seq / iter
  std::vector<RPath> children;
  bool one_or_more = false;
};

struct RandomGraph {
  SchemaPtr schema;
  GraphPtr graph;
  std::vector<std::string> type_names;
  std::vector<std::string> roles;       // includes "" for unnamed ends
  std::vector<std::string> name_values;
};

inline RandomGraph make_random_graph(std::mt19937& rng, int max_vertices = 30,
                                     int max_edges = 60) {
  RandomGraph rg;
  rg.schema = std::make_shared<Schema>("random");
  rg.name_values = {"a", "b", "c"};

  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };

  int n_classes = 2 + pick(3);
  std::vector<VertexClassId> classes;
  for (int i = 0; i < n_classes; ++i) {
    std::string name = "C" + std::to_string(i);
    auto id = rg.schema->add_vertex_class(name, false);
    // single-parent chains keep attribute visibility clash-free
    if (i > 0 && pick(2) == 0) rg.schema->add_specialization(id, classes[pick(i)]);
    classes.push_back(id);
    rg.type_names.push_back(name);
  }
  for (auto id : classes) {
    bool is_root = rg.schema->vertex_class(id).superclasses.empty();
    if (is_root) rg.schema->add_attribute(id, "name", Domain::String, std::nullopt);
  }

  int n_edge_classes = 3 + pick(4);
  std::vector<EdgeClassId> edge_classes;
  for (int i = 0; i < n_edge_classes; ++i) {
    std::string role = pick(5) == 0 ? "" : "r" + std::to_string(i);
    auto id = rg.schema->add_edge_class("E" + std::to_string(i), classes[pick(n_classes)],
                                        classes[pick(n_classes)], "", role,
                                        pick(2) == 0 ? EdgeKind::Containment : EdgeKind::Plain);
    edge_classes.push_back(id);
    rg.roles.push_back(role);
  }

  rg.graph = std::make_unique<Graph>(rg.schema);
  int n_vertices = 1 + pick(max_vertices);
  for (int i = 0; i < n_vertices; ++i) {
    VertexId v = rg.graph->create_vertex(classes[pick(n_classes)]);
    rg.graph->set_attribute(v, "name",
                            Value::string(rg.name_values[pick(static_cast<int>(
                                rg.name_values.size()))]));
  }
  int n_edges = pick(max_edges + 1);
  for (int i = 0; i < n_edges; ++i) {
    EdgeClassId ec = edge_classes[pick(n_edge_classes)];
    const auto& def = rg.schema->edge_class(ec);
    auto froms = rg.graph->vertices_of_type(def.from_class);
    auto tos = rg.graph->vertices_of_type(def.to_class);
    if (froms.empty() || tos.empty()) continue;
    rg.graph->create_edge(ec, froms[pick(static_cast<int>(froms.size()))],
                          tos[pick(static_cast<int>(tos.size()))]);
  }
  return rg;
}

inline RPath random_path(std::mt19937& rng, const RandomGraph& rg, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };
  auto leaf = [&]() {
    RPath p;
    if (pick(3) != 0) {
      p.kind = RPath::Kind::Step;
      p.containment = pick(2) == 0;
      if (!rg.roles.empty() && pick(3) != 0) {
        std::string role = rg.roles[pick(static_cast<int>(rg.roles.size()))];
        if (!role.empty()) p.role = role;
      }
    } else {
      p.kind = RPath::Kind::Restrict;
      p.types.push_back(rg.type_names[pick(static_cast<int>(rg.type_names.size()))]);
      if (pick(3) == 0)
        p.types.push_back(rg.type_names[pick(static_cast<int>(rg.type_names.size()))]);
      if (pick(3) == 0)
        p.name_equals = rg.name_values[pick(static_cast<int>(rg.name_values.size()))];
    }
    return p;
  };
  if (depth <= 0) return leaf();
  switch (pick(4)) {
    case 0: {
      RPath p;
      p.kind = RPath::Kind::Seq;
      int n = 1 + pick(3);
      for (int i = 0; i < n; ++i) p.children.push_back(random_path(rng, rg, depth - 1));
      return p;
    }
    case 1: {
      RPath p;
      p.kind = RPath::Kind::Iter;
      p.one_or_more = pick(2) == 0;
      p.children.push_back(random_path(rng, rg, depth - 1));
      return p;
    }
    default:
      return leaf();
  }
}

// --- lowering to the engine AST ----------------------------------------------

inline PathElemPtr to_path_elem(const RPath& p);

inline PathExpr to_path_expr(const RPath& p) {
  PathSequence seq;
  if (p.kind == RPath::Kind::Seq && !p.children.empty()) {
    for (const auto& c : p.children) seq.elems.push_back(to_path_elem(c));
  } else {
    seq.elems.push_back(to_path_elem(p));
  }
  return seq;
}

inline PathElemPtr to_path_elem(const RPath& p) {
  auto elem = std::make_shared<PathElem>();
  switch (p.kind) {
    case RPath::Kind::Step: {
      EdgeStep step;
      step.containment_only = p.containment;
      step.role = p.role;
      elem->node = step;
      break;
    }
    case RPath::Kind::Restrict: {
      VertexRestriction restr;
      restr.types = p.types;
      if (p.name_equals) {
        auto this_vertex = std::make_shared<Expr>();
        this_vertex->node = VarRef{"thisVertex"};
        auto access = std::make_shared<Expr>();
        access->node = AttrAccess{this_vertex, "name"};
        auto lit = std::make_shared<Expr>();
        lit->node = StringLit{*p.name_equals};
        auto cmp = std::make_shared<Expr>();
        cmp->node = Comparison{true, access, lit};
        restr.predicate = cmp;
      }
      elem->node = std::move(restr);
      break;
    }
    case RPath::Kind::Seq:
      elem->node = to_path_expr(p);
      break;
    case RPath::Kind::Iter: {
      PathIteration iter;
      iter.body = to_path_elem(p.children.at(0));
      iter.one_or_more = p.one_or_more;
      elem->node = std::move(iter);
      break;
    }
  }
  return elem;
}

// --- relation-algebra oracle ---------------------------------------------------

using Relation = std::vector<std::vector<bool>>;

inline Relation rel_identity(size_t n) {
  Relation r(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) r[i][i] = true;
  return r;
}

inline Relation rel_compose(const Relation& a, const Relation& b) {
  size_t n = a.size();
  Relation r(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (size_t j = 0; j < n; ++j)
          if (b[k][j]) r[i][j] = true;
  return r;
}

inline Relation rel_union(const Relation& a, const Relation& b) {
  size_t n = a.size();
  Relation r = a;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (b[i][j]) r[i][j] = true;
  return r;
}

inline bool rel_equal(const Relation& a, const Relation& b) { return a == b; }

// Reflexive-transitive closure as a fixpoint.
inline Relation rel_star(const Relation& a) {
  Relation r = rel_union(rel_identity(a.size()), a);
  for (;;) {
    Relation next = rel_union(r, rel_compose(r, r));
    if (rel_equal(next, r)) return r;
    r = std::move(next);
  }
}

inline Relation path_relation(const RPath& p, const Graph& g) {
  size_t n = g.vertex_count();
  switch (p.kind) {
    case RPath::Kind::Step: {
      Relation r(n, std::vector<bool>(n, false));
      for (const auto& e : g.edges()) {
        const auto& ec = g.schema().edge_class(e.cls);
        if (p.containment && ec.kind != EdgeKind::Containment) continue;
        if (p.role && ec.to_role != *p.role) continue;
        r[e.from.index][e.to.index] = true;
      }
      return r;
    }
    case RPath::Kind::Restrict: {
      Relation r(n, std::vector<bool>(n, false));
      for (uint32_t i = 0; i < n; ++i) {
        bool type_ok = false;
        for (const auto& t : p.types) {
          auto cls = g.schema().find_vertex_class(t);
          if (cls && g.is_instance_of(VertexId{i}, *cls)) {
            type_ok = true;
            break;
          }
        }
        if (!type_ok) continue;
        if (p.name_equals) {
          Value v = g.get_attribute(VertexId{i}, "name");
          if (!v.is_string() || v.as_string() != *p.name_equals) continue;
        }
        r[i][i] = true;
      }
      return r;
    }
    case RPath::Kind::Seq: {
      Relation r = rel_identity(n);
      for (const auto& c : p.children) r = rel_compose(r, path_relation(c, g));
      return r;
    }
    case RPath::Kind::Iter: {
      Relation body = path_relation(p.children.at(0), g);
      Relation star = rel_star(body);
      return p.one_or_more ? rel_compose(body, star) : star;
    }
  }
  return rel_identity(n);
}

inline std::vector<VertexId> oracle_reachable(const std::vector<VertexId>& start, const RPath& p,
                                              const Graph& g) {
  Relation r = path_relation(p, g);
  std::vector<VertexId> out;
  for (uint32_t j = 0; j < g.vertex_count(); ++j) {
    bool hit = false;
    for (VertexId s : start)
      if (r[s.index][j]) {
        hit = true;
        break;
      }
    if (hit) out.push_back(VertexId{j});
  }
  return out;
}

}  // namespace gretl::testing
