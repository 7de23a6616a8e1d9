// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gretl/schema.hpp"
#include "gretl/value.hpp"

namespace gretl {

struct VertexId {
  uint32_t index = 0;
  friend bool operator==(VertexId a, VertexId b) { return a.index == b.index; }
};

struct EdgeId {
  uint32_t index = 0;
  friend bool operator==(EdgeId a, EdgeId b) { return a.index == b.index; }
};

struct Vertex {
  std::string id;  // external id; generated "v<N>" unless supplied by a loader
  VertexClassId cls;
  std::map<std::string, Value> attribute_values;  // only explicitly written ones
};

struct Edge {
  std::string id;
  EdgeClassId cls;
  VertexId from;
  VertexId to;
  std::map<std::string, Value> attribute_values;
};

// Instance level: typed vertices/edges conforming to a schema. Single-writer;
// iteration order is creation order and is the only ordering surfaced.
// Non-copyable and heap-held so Value refs into it stay stable.
class Graph {
public:
  explicit Graph(SchemaPtr schema);
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  const Schema& schema() const { return *schema_; }
  const SchemaPtr& schema_ptr() const { return schema_; }

  // Per-process construction serial; keeps cross-graph Value ordering
  // deterministic within a run.
  uint64_t serial() const { return serial_; }

  VertexId create_vertex(VertexClassId cls, const std::string& external_id = "");
  EdgeId create_edge(EdgeClassId cls, VertexId from, VertexId to,
                     const std::string& external_id = "");

  size_t vertex_count() const { return vertices_.size(); }
  size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(VertexId id) const { return vertices_.at(id.index); }
  const Edge& edge(EdgeId id) const { return edges_.at(id.index); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex_by_external_id(const std::string& id) const;

  // Outgoing edges of a vertex, in creation order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_edges_.at(v.index); }

  bool is_instance_of(VertexId v, VertexClassId cls) const;
  bool is_instance_of(EdgeId e, EdgeClassId cls) const;

  // All instances of cls (including subclasses), creation order.
  std::vector<VertexId> vertices_of_type(VertexClassId cls) const;
  std::vector<EdgeId> edges_of_type(EdgeClassId cls) const;

  Value get_attribute(VertexId v, const std::string& name) const;
  Value get_attribute(EdgeId e, const std::string& name) const;
  void set_attribute(VertexId v, const std::string& name, Value value);
  void set_attribute(EdgeId e, const std::string& name, Value value);

  // Full invariant pass; throws ValidationError naming the violated rule.
  // Multiplicities are stored but only checked when asked.
  void validate(bool check_multiplicities = false) const;

  // Content hash for immutability checks; stable within a run.
  uint64_t fingerprint() const;

private:
  template <typename ClassIdT>
  Value read_attribute(const std::map<std::string, Value>& stored, ClassIdT cls,
                       const std::string& name) const;

  SchemaPtr schema_;
  uint64_t serial_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::map<std::string, uint32_t> vertex_by_external_id_;
  std::map<std::string, uint32_t> edge_by_external_id_;
};

using GraphPtr = std::unique_ptr<Graph>;

}  // namespace gretl
