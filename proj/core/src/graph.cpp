// SPDX-License-Identifier: Apache-2.0
#include "gretl/graph.hpp"

#include <atomic>

namespace gretl {

namespace {

std::atomic<uint64_t> next_graph_serial{1};

// FNV-1a, good enough for immutability fingerprints.
struct Hasher {
  uint64_t h = 1469598103934665603ull;
  void mix(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  }
  void mix(const std::string& s) {
    mix(s.data(), s.size());
    mix("\0", 1);
  }
  void mix(uint64_t v) { mix(&v, sizeof v); }
};

void mix_value(Hasher& h, const Value& v) {
  h.mix(static_cast<uint64_t>(v.storage().index()));
  if (v.is_boolean()) h.mix(static_cast<uint64_t>(v.as_boolean()));
  else if (v.is_integer()) h.mix(static_cast<uint64_t>(v.as_integer()));
  else if (v.is_string()) h.mix(v.as_string());
  else if (v.is_vertex()) h.mix(static_cast<uint64_t>(v.as_vertex().index));
  else if (v.is_edge()) h.mix(static_cast<uint64_t>(v.as_edge().index));
  else if (v.is_tuple())
    for (const auto& item : v.as_tuple().items) mix_value(h, item);
  else if (v.is_set())
    for (const auto& item : v.as_set().items()) mix_value(h, item);
  else if (v.is_map())
    for (const auto& [k, val] : v.as_map().entries()) {
      mix_value(h, k);
      mix_value(h, val);
    }
}

}  // namespace

Graph::Graph(SchemaPtr schema)
    : schema_(std::move(schema)), serial_(next_graph_serial.fetch_add(1)) {}

VertexId Graph::create_vertex(VertexClassId cls, const std::string& external_id) {
  const auto& vc = schema_->vertex_class(cls);
  if (vc.is_abstract)
    throw GretlError(ErrorKind::AbstractInstantiation,
                     "cannot instantiate abstract vertex class '" + vc.qualified_name + "'");
  VertexId id{static_cast<uint32_t>(vertices_.size())};
  std::string ext = external_id.empty() ? "v" + std::to_string(id.index) : external_id;
  if (vertex_by_external_id_.count(ext))
    throw GretlError(ErrorKind::ValidationError,
                     "vertex id '" + ext + "' is not unique (graph invariant: unique element ids)");
  vertices_.push_back(Vertex{ext, cls, {}});
  out_edges_.emplace_back();
  vertex_by_external_id_[ext] = id.index;
  return id;
}

EdgeId Graph::create_edge(EdgeClassId cls, VertexId from, VertexId to,
                          const std::string& external_id) {
  const auto& ec = schema_->edge_class(cls);
  if (ec.is_abstract)
    throw GretlError(ErrorKind::AbstractInstantiation,
                     "cannot instantiate abstract edge class '" + ec.qualified_name + "'");
  if (from.index >= vertices_.size() || to.index >= vertices_.size())
    throw GretlError(ErrorKind::DanglingEndpoint,
                     "edge of class '" + ec.qualified_name + "' references a missing vertex");
  if (!schema_->is_subclass_of(vertices_[from.index].cls, ec.from_class))
    throw GretlError(ErrorKind::TypeNonConformance,
                     "from-vertex '" + vertices_[from.index].id + "' does not conform to '" +
                         schema_->vertex_class(ec.from_class).qualified_name + "'");
  if (!schema_->is_subclass_of(vertices_[to.index].cls, ec.to_class))
    throw GretlError(ErrorKind::TypeNonConformance,
                     "to-vertex '" + vertices_[to.index].id + "' does not conform to '" +
                         schema_->vertex_class(ec.to_class).qualified_name + "'");
  EdgeId id{static_cast<uint32_t>(edges_.size())};
  std::string ext = external_id.empty() ? "e" + std::to_string(id.index) : external_id;
  if (edge_by_external_id_.count(ext))
    throw GretlError(ErrorKind::ValidationError,
                     "edge id '" + ext + "' is not unique (graph invariant: unique element ids)");
  edges_.push_back(Edge{ext, cls, from, to, {}});
  edge_by_external_id_[ext] = id.index;
  out_edges_[from.index].push_back(id);
  return id;
}

std::optional<VertexId> Graph::find_vertex_by_external_id(const std::string& id) const {
  auto it = vertex_by_external_id_.find(id);
  if (it == vertex_by_external_id_.end()) return std::nullopt;
  return VertexId{it->second};
}

bool Graph::is_instance_of(VertexId v, VertexClassId cls) const {
  return schema_->is_subclass_of(vertices_.at(v.index).cls, cls);
}

bool Graph::is_instance_of(EdgeId e, EdgeClassId cls) const {
  return schema_->is_subclass_of(edges_.at(e.index).cls, cls);
}

std::vector<VertexId> Graph::vertices_of_type(VertexClassId cls) const {
  std::vector<VertexId> out;
  for (uint32_t i = 0; i < vertices_.size(); ++i)
    if (schema_->is_subclass_of(vertices_[i].cls, cls)) out.push_back(VertexId{i});
  return out;
}

std::vector<EdgeId> Graph::edges_of_type(EdgeClassId cls) const {
  std::vector<EdgeId> out;
  for (uint32_t i = 0; i < edges_.size(); ++i)
    if (schema_->is_subclass_of(edges_[i].cls, cls)) out.push_back(EdgeId{i});
  return out;
}

template <typename ClassIdT>
Value Graph::read_attribute(const std::map<std::string, Value>& stored, ClassIdT cls,
                            const std::string& name) const {
  auto def = schema_->find_visible_attribute(cls, name);
  if (!def)
    throw GretlError(ErrorKind::UnknownAttribute, "attribute '" + name + "' is not visible here");
  auto it = stored.find(name);
  if (it != stored.end()) return it->second;
  if (def->default_value) return *def->default_value;
  return Value::undefined();
}

Value Graph::get_attribute(VertexId v, const std::string& name) const {
  const auto& vx = vertices_.at(v.index);
  try {
    return read_attribute(vx.attribute_values, vx.cls, name);
  } catch (GretlError& e) {
    throw GretlError(e.kind(), "attribute '" + name + "' is not visible on vertex '" + vx.id +
                                   "' of class '" + schema_->vertex_class(vx.cls).qualified_name +
                                   "'");
  }
}

Value Graph::get_attribute(EdgeId e, const std::string& name) const {
  const auto& ed = edges_.at(e.index);
  try {
    return read_attribute(ed.attribute_values, ed.cls, name);
  } catch (GretlError& err) {
    throw GretlError(err.kind(), "attribute '" + name + "' is not visible on edge '" + ed.id +
                                     "' of class '" + schema_->edge_class(ed.cls).qualified_name +
                                     "'");
  }
}

namespace {

void check_settable(const std::optional<AttributeDef>& def, const std::string& name,
                    const std::string& element_id, const Value& value) {
  if (!def)
    throw GretlError(ErrorKind::UnknownAttribute,
                     "attribute '" + name + "' is not visible on element '" + element_id + "'");
  if (!value_matches_domain(value, def->domain))
    throw GretlError(ErrorKind::DomainMismatch, "value " + value.render() + " for '" + name +
                                                    "' does not have domain " +
                                                    domain_name(def->domain));
}

}  // namespace

void Graph::set_attribute(VertexId v, const std::string& name, Value value) {
  auto& vx = vertices_.at(v.index);
  check_settable(schema_->find_visible_attribute(vx.cls, name), name, vx.id, value);
  vx.attribute_values[name] = std::move(value);
}

void Graph::set_attribute(EdgeId e, const std::string& name, Value value) {
  auto& ed = edges_.at(e.index);
  check_settable(schema_->find_visible_attribute(ed.cls, name), name, ed.id, value);
  ed.attribute_values[name] = std::move(value);
}

void Graph::validate(bool check_multiplicities) const {
  for (uint32_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    const auto& vc = schema_->vertex_class(v.cls);
    if (vc.is_abstract)
      throw GretlError(ErrorKind::ValidationError,
                       "vertex '" + v.id + "' instantiates abstract class '" + vc.qualified_name +
                           "' (graph invariant: element types are non-abstract)");
    for (const auto& [name, value] : v.attribute_values) {
      auto def = schema_->find_visible_attribute(v.cls, name);
      if (!def)
        throw GretlError(ErrorKind::ValidationError,
                         "vertex '" + v.id + "' carries attribute '" + name +
                             "' not visible on its type (graph invariant: attribute visibility)");
      if (!value.is_undefined() && !value_matches_domain(value, def->domain))
        throw GretlError(ErrorKind::ValidationError,
                         "vertex '" + v.id + "' attribute '" + name + "' violates domain " +
                             domain_name(def->domain) +
                             " (graph invariant: attribute domains)");
    }
  }
  for (uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const auto& ec = schema_->edge_class(e.cls);
    if (ec.is_abstract)
      throw GretlError(ErrorKind::ValidationError,
                       "edge '" + e.id + "' instantiates abstract class '" + ec.qualified_name +
                           "' (graph invariant: element types are non-abstract)");
    if (e.from.index >= vertices_.size() || e.to.index >= vertices_.size())
      throw GretlError(ErrorKind::ValidationError,
                       "edge '" + e.id +
                           "' references a missing endpoint (graph invariant: endpoints exist)");
    if (!schema_->is_subclass_of(vertices_[e.from.index].cls, ec.from_class) ||
        !schema_->is_subclass_of(vertices_[e.to.index].cls, ec.to_class))
      throw GretlError(ErrorKind::ValidationError,
                       "edge '" + e.id +
                           "' endpoint types do not conform to its edge class (graph "
                           "invariant: endpoint conformance)");
    for (const auto& [name, value] : e.attribute_values) {
      auto def = schema_->find_visible_attribute(e.cls, name);
      if (!def)
        throw GretlError(ErrorKind::ValidationError,
                         "edge '" + e.id + "' carries attribute '" + name +
                             "' not visible on its type (graph invariant: attribute visibility)");
      if (!value.is_undefined() && !value_matches_domain(value, def->domain))
        throw GretlError(ErrorKind::ValidationError,
                         "edge '" + e.id + "' attribute '" + name + "' violates domain " +
                             domain_name(def->domain) +
                             " (graph invariant: attribute domains)");
    }
  }
  if (check_multiplicities) {
    // Count per (edge class, vertex) in both directions.
    for (uint32_t c = 0; c < schema_->edge_class_count(); ++c) {
      const auto& ec = schema_->edge_class(EdgeClassId{c});
      for (uint32_t v = 0; v < vertices_.size(); ++v) {
        if (!schema_->is_subclass_of(vertices_[v].cls, ec.from_class)) continue;
        uint32_t outgoing = 0;
        for (const auto& e : edges_)
          if (e.cls == EdgeClassId{c} && e.from.index == v) ++outgoing;
        if (ec.to_multiplicity.max && outgoing > *ec.to_multiplicity.max)
          throw GretlError(ErrorKind::ValidationError,
                           "vertex '" + vertices_[v].id + "' exceeds to-multiplicity of '" +
                               ec.qualified_name + "' (schema rule: multiplicities)");
      }
    }
  }
}

uint64_t Graph::fingerprint() const {
  Hasher h;
  h.mix(static_cast<uint64_t>(vertices_.size()));
  for (const auto& v : vertices_) {
    h.mix(v.id);
    h.mix(schema_->vertex_class(v.cls).qualified_name);
    for (const auto& [name, value] : v.attribute_values) {
      h.mix(name);
      mix_value(h, value);
    }
  }
  h.mix(static_cast<uint64_t>(edges_.size()));
  for (const auto& e : edges_) {
    h.mix(e.id);
    h.mix(schema_->edge_class(e.cls).qualified_name);
    h.mix(static_cast<uint64_t>(e.from.index));
    h.mix(static_cast<uint64_t>(e.to.index));
    for (const auto& [name, value] : e.attribute_values) {
      h.mix(name);
      mix_value(h, value);
    }
  }
  return h.h;
}

}  // namespace gretl
