// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gretl/error.hpp"
#include "gretl/value.hpp"

namespace gretl {

enum class Domain { String, Integer, Boolean };

const char* domain_name(Domain d);
bool value_matches_domain(const Value& v, Domain d);

enum class EdgeKind { Plain, Containment };

struct VertexClassId {
  uint32_t index = 0;
  friend bool operator==(VertexClassId a, VertexClassId b) { return a.index == b.index; }
};

struct EdgeClassId {
  uint32_t index = 0;
  friend bool operator==(EdgeClassId a, EdgeClassId b) { return a.index == b.index; }
};

// Either kind of class, as resolved from a qualified or simple name.
struct ClassRef {
  bool is_edge = false;
  uint32_t index = 0;
};

struct AttributeDef {
  std::string name;
  Domain domain = Domain::String;
  std::optional<Value> default_value;  // must match domain when present
};

struct Multiplicity {
  uint32_t min = 0;
  std::optional<uint32_t> max;  // nullopt = unbounded

  static Multiplicity unbounded() { return {0, std::nullopt}; }
  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.min == b.min && a.max == b.max;
  }
};

struct VertexClass {
  std::string qualified_name;
  bool is_abstract = false;
  std::vector<VertexClassId> superclasses;
  std::vector<AttributeDef> attributes;
};

struct EdgeClass {
  std::string qualified_name;
  bool is_abstract = false;
  std::vector<EdgeClassId> superclasses;
  std::vector<AttributeDef> attributes;
  VertexClassId from_class;
  VertexClassId to_class;
  std::string from_role;  // empty = unnamed end
  std::string to_role;
  Multiplicity from_multiplicity = Multiplicity::unbounded();
  Multiplicity to_multiplicity = Multiplicity::unbounded();
  EdgeKind kind = EdgeKind::Plain;
};

// The metamodel: vertex/edge classes with multiple inheritance and typed
// attributes. Qualified names are unique across both class kinds; the
// package of "pkg.Inner" is "pkg".
class Schema {
public:
  explicit Schema(std::string name = "") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::set<std::string>& packages() const { return packages_; }

  VertexClassId add_vertex_class(const std::string& qualified_name, bool is_abstract);
  EdgeClassId add_edge_class(const std::string& qualified_name, VertexClassId from,
                             VertexClassId to, const std::string& from_role,
                             const std::string& to_role, EdgeKind kind,
                             std::optional<Multiplicity> from_mult = std::nullopt,
                             std::optional<Multiplicity> to_mult = std::nullopt);

  // AddSubClass: sub inherits super's attributes; instances of sub conform to
  // super in type filters. Throws InheritanceCycle / AttributeClash.
  void add_specialization(VertexClassId sub, VertexClassId super);
  void add_specialization(EdgeClassId sub, EdgeClassId super);
  void add_specialization(const ClassRef& sub, const ClassRef& super);

  void add_attribute(VertexClassId cls, const std::string& name, Domain domain,
                     std::optional<Value> default_value);
  void add_attribute(EdgeClassId cls, const std::string& name, Domain domain,
                     std::optional<Value> default_value);
  void add_attribute(const ClassRef& cls, const std::string& name, Domain domain,
                     std::optional<Value> default_value);

  const VertexClass& vertex_class(VertexClassId id) const { return vertex_classes_.at(id.index); }
  const EdgeClass& edge_class(EdgeClassId id) const { return edge_classes_.at(id.index); }
  size_t vertex_class_count() const { return vertex_classes_.size(); }
  size_t edge_class_count() const { return edge_classes_.size(); }

  std::optional<ClassRef> find_class(const std::string& qualified_name) const;
  std::optional<VertexClassId> find_vertex_class(const std::string& qualified_name) const;
  std::optional<EdgeClassId> find_edge_class(const std::string& qualified_name) const;
  VertexClassId require_vertex_class(const std::string& qualified_name) const;
  EdgeClassId require_edge_class(const std::string& qualified_name) const;

  // Reflexive-transitive conformance.
  bool is_subclass_of(VertexClassId sub, VertexClassId super) const;
  bool is_subclass_of(EdgeClassId sub, EdgeClassId super) const;

  // Declared + inherited attributes, duplicates rejected at mutation time.
  std::vector<AttributeDef> visible_attributes(VertexClassId id) const;
  std::vector<AttributeDef> visible_attributes(EdgeClassId id) const;
  std::optional<AttributeDef> find_visible_attribute(VertexClassId id,
                                                     const std::string& name) const;
  std::optional<AttributeDef> find_visible_attribute(EdgeClassId id,
                                                     const std::string& name) const;

  // Simple name -> vertex classes carrying it, for import-based resolution.
  std::vector<VertexClassId> vertex_classes_with_simple_name(const std::string& simple) const;

  static std::string package_of(const std::string& qualified_name);
  static std::string simple_name_of(const std::string& qualified_name);

private:
  void check_fresh_name(const std::string& qualified_name) const;
  void check_role_uniqueness(const EdgeClass& candidate) const;
  void recheck_attribute_visibility() const;  // throws AttributeClash

  std::string name_;
  std::set<std::string> packages_;
  std::vector<VertexClass> vertex_classes_;
  std::vector<EdgeClass> edge_classes_;
  std::map<std::string, ClassRef> by_name_;
};

using SchemaPtr = std::shared_ptr<Schema>;

}  // namespace gretl
