// SPDX-License-Identifier: Apache-2.0
#include "gretl/schema.hpp"

#include <algorithm>
#include <functional>

namespace gretl {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::String: return "String";
    case Domain::Integer: return "Integer";
    case Domain::Boolean: return "Boolean";
  }
  return "?";
}

bool value_matches_domain(const Value& v, Domain d) {
  switch (d) {
    case Domain::String: return v.is_string();
    case Domain::Integer: return v.is_integer();
    case Domain::Boolean: return v.is_boolean();
  }
  return false;
}

std::string Schema::package_of(const std::string& qualified_name) {
  auto pos = qualified_name.rfind('.');
  return pos == std::string::npos ? std::string() : qualified_name.substr(0, pos);
}

std::string Schema::simple_name_of(const std::string& qualified_name) {
  auto pos = qualified_name.rfind('.');
  return pos == std::string::npos ? qualified_name : qualified_name.substr(pos + 1);
}

void Schema::check_fresh_name(const std::string& qualified_name) const {
  if (by_name_.count(qualified_name))
    throw GretlError(ErrorKind::DuplicateClassName,
                     "class name '" + qualified_name + "' is already used in schema");
}

VertexClassId Schema::add_vertex_class(const std::string& qualified_name, bool is_abstract) {
  check_fresh_name(qualified_name);
  VertexClassId id{static_cast<uint32_t>(vertex_classes_.size())};
  vertex_classes_.push_back(VertexClass{qualified_name, is_abstract, {}, {}});
  by_name_[qualified_name] = ClassRef{false, id.index};
  packages_.insert(package_of(qualified_name));
  return id;
}

void Schema::check_role_uniqueness(const EdgeClass& candidate) const {
  // A role is ambiguous when another edge class could attach the same role to
  // the same vertex (the from-classes, resp. to-classes, overlap by
  // inheritance), making role-based traversal non-deterministic.
  auto related = [this](VertexClassId a, VertexClassId b) {
    return is_subclass_of(a, b) || is_subclass_of(b, a);
  };
  for (const auto& other : edge_classes_) {
    if (!candidate.to_role.empty() && candidate.to_role == other.to_role &&
        related(candidate.from_class, other.from_class))
      throw GretlError(ErrorKind::AmbiguousRole,
                       "to-role '" + candidate.to_role + "' of '" + candidate.qualified_name +
                           "' collides with '" + other.qualified_name + "'");
    if (!candidate.from_role.empty() && candidate.from_role == other.from_role &&
        related(candidate.to_class, other.to_class))
      throw GretlError(ErrorKind::AmbiguousRole,
                       "from-role '" + candidate.from_role + "' of '" + candidate.qualified_name +
                           "' collides with '" + other.qualified_name + "'");
  }
}

EdgeClassId Schema::add_edge_class(const std::string& qualified_name, VertexClassId from,
                                   VertexClassId to, const std::string& from_role,
                                   const std::string& to_role, EdgeKind kind,
                                   std::optional<Multiplicity> from_mult,
                                   std::optional<Multiplicity> to_mult) {
  check_fresh_name(qualified_name);
  if (from.index >= vertex_classes_.size() || to.index >= vertex_classes_.size())
    throw GretlError(ErrorKind::UnknownClass,
                     "edge class '" + qualified_name + "' references an unknown endpoint class");
  EdgeClass ec;
  ec.qualified_name = qualified_name;
  ec.from_class = from;
  ec.to_class = to;
  ec.from_role = from_role;
  ec.to_role = to_role;
  ec.kind = kind;
  ec.from_multiplicity = from_mult.value_or(Multiplicity::unbounded());
  ec.to_multiplicity = to_mult.value_or(Multiplicity::unbounded());
  check_role_uniqueness(ec);
  EdgeClassId id{static_cast<uint32_t>(edge_classes_.size())};
  edge_classes_.push_back(std::move(ec));
  by_name_[qualified_name] = ClassRef{true, id.index};
  packages_.insert(package_of(qualified_name));
  return id;
}

namespace {

// Walks declared + inherited attribute definitions; reports a clash when two
// distinct declarations share a name anywhere in the visibility of one class.
template <typename ClassT, typename IdT>
std::vector<AttributeDef> collect_visible(const std::vector<ClassT>& classes, IdT id,
                                          bool* clash, std::string* clash_name) {
  std::vector<AttributeDef> out;
  std::vector<bool> seen(classes.size(), false);
  std::function<void(uint32_t)> walk = [&](uint32_t c) {
    if (seen[c]) return;  // diamond inheritance: same declaration once
    seen[c] = true;
    for (const auto& sup : classes[c].superclasses) walk(sup.index);
    for (const auto& attr : classes[c].attributes) {
      bool duplicate = std::any_of(out.begin(), out.end(),
                                   [&](const AttributeDef& a) { return a.name == attr.name; });
      if (duplicate) {
        if (clash) *clash = true;
        if (clash_name) *clash_name = attr.name;
        continue;
      }
      out.push_back(attr);
    }
  };
  walk(id.index);
  return out;
}

template <typename ClassT>
bool reaches(const std::vector<ClassT>& classes, uint32_t from, uint32_t target) {
  if (from == target) return true;
  for (const auto& sup : classes[from].superclasses)
    if (reaches(classes, sup.index, target)) return true;
  return false;
}

}  // namespace

void Schema::recheck_attribute_visibility() const {
  for (uint32_t i = 0; i < vertex_classes_.size(); ++i) {
    bool clash = false;
    std::string name;
    collect_visible(vertex_classes_, VertexClassId{i}, &clash, &name);
    if (clash)
      throw GretlError(ErrorKind::AttributeClash,
                       "attribute '" + name + "' reaches class '" +
                           vertex_classes_[i].qualified_name + "' twice");
  }
  for (uint32_t i = 0; i < edge_classes_.size(); ++i) {
    bool clash = false;
    std::string name;
    collect_visible(edge_classes_, EdgeClassId{i}, &clash, &name);
    if (clash)
      throw GretlError(ErrorKind::AttributeClash,
                       "attribute '" + name + "' reaches class '" +
                           edge_classes_[i].qualified_name + "' twice");
  }
}

void Schema::add_specialization(VertexClassId sub, VertexClassId super) {
  if (reaches(vertex_classes_, super.index, sub.index))
    throw GretlError(ErrorKind::InheritanceCycle,
                     "making '" + vertex_classes_[sub.index].qualified_name + "' specialize '" +
                         vertex_classes_[super.index].qualified_name + "' closes a cycle");
  auto& supers = vertex_classes_[sub.index].superclasses;
  if (std::any_of(supers.begin(), supers.end(), [&](auto s) { return s == super; })) return;
  supers.push_back(super);
  try {
    recheck_attribute_visibility();
  } catch (...) {
    supers.pop_back();
    throw;
  }
}

void Schema::add_specialization(EdgeClassId sub, EdgeClassId super) {
  if (reaches(edge_classes_, super.index, sub.index))
    throw GretlError(ErrorKind::InheritanceCycle,
                     "making '" + edge_classes_[sub.index].qualified_name + "' specialize '" +
                         edge_classes_[super.index].qualified_name + "' closes a cycle");
  auto& supers = edge_classes_[sub.index].superclasses;
  if (std::any_of(supers.begin(), supers.end(), [&](auto s) { return s == super; })) return;
  supers.push_back(super);
  try {
    recheck_attribute_visibility();
  } catch (...) {
    supers.pop_back();
    throw;
  }
}

void Schema::add_specialization(const ClassRef& sub, const ClassRef& super) {
  if (sub.is_edge != super.is_edge)
    throw GretlError(ErrorKind::KindMismatch,
                     "cannot specialize a vertex class under an edge class or vice versa");
  if (sub.is_edge)
    add_specialization(EdgeClassId{sub.index}, EdgeClassId{super.index});
  else
    add_specialization(VertexClassId{sub.index}, VertexClassId{super.index});
}

namespace {

template <typename ClassT, typename IdT>
void add_attribute_impl(std::vector<ClassT>& classes, IdT cls, const std::string& name,
                        Domain domain, std::optional<Value> default_value,
                        const std::string& class_name) {
  if (default_value && !value_matches_domain(*default_value, domain))
    throw GretlError(ErrorKind::DomainMismatch,
                     "default for '" + class_name + "." + name + "' does not have domain " +
                         domain_name(domain));
  auto visible = collect_visible(classes, cls, nullptr, nullptr);
  if (std::any_of(visible.begin(), visible.end(),
                  [&](const AttributeDef& a) { return a.name == name; }))
    throw GretlError(ErrorKind::DuplicateAttribute,
                     "attribute '" + name + "' is already visible on '" + class_name + "'");
  // A subclass may not already declare the name either.
  for (uint32_t i = 0; i < classes.size(); ++i) {
    if (i == cls.index || !reaches(classes, i, cls.index)) continue;
    for (const auto& a : classes[i].attributes)
      if (a.name == name)
        throw GretlError(ErrorKind::DuplicateAttribute,
                         "attribute '" + name + "' is already declared by subclass '" +
                             classes[i].qualified_name + "'");
  }
  classes[cls.index].attributes.push_back(AttributeDef{name, domain, std::move(default_value)});
}

}  // namespace

void Schema::add_attribute(VertexClassId cls, const std::string& name, Domain domain,
                           std::optional<Value> default_value) {
  add_attribute_impl(vertex_classes_, cls, name, domain, std::move(default_value),
                     vertex_classes_[cls.index].qualified_name);
}

void Schema::add_attribute(EdgeClassId cls, const std::string& name, Domain domain,
                           std::optional<Value> default_value) {
  add_attribute_impl(edge_classes_, cls, name, domain, std::move(default_value),
                     edge_classes_[cls.index].qualified_name);
}

void Schema::add_attribute(const ClassRef& cls, const std::string& name, Domain domain,
                           std::optional<Value> default_value) {
  if (cls.is_edge)
    add_attribute(EdgeClassId{cls.index}, name, domain, std::move(default_value));
  else
    add_attribute(VertexClassId{cls.index}, name, domain, std::move(default_value));
}

std::optional<ClassRef> Schema::find_class(const std::string& qualified_name) const {
  auto it = by_name_.find(qualified_name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexClassId> Schema::find_vertex_class(const std::string& qualified_name) const {
  auto ref = find_class(qualified_name);
  if (!ref || ref->is_edge) return std::nullopt;
  return VertexClassId{ref->index};
}

std::optional<EdgeClassId> Schema::find_edge_class(const std::string& qualified_name) const {
  auto ref = find_class(qualified_name);
  if (!ref || !ref->is_edge) return std::nullopt;
  return EdgeClassId{ref->index};
}

VertexClassId Schema::require_vertex_class(const std::string& qualified_name) const {
  auto id = find_vertex_class(qualified_name);
  if (!id)
    throw GretlError(ErrorKind::UnknownClass,
                     "no vertex class named '" + qualified_name + "' in schema");
  return *id;
}

EdgeClassId Schema::require_edge_class(const std::string& qualified_name) const {
  auto id = find_edge_class(qualified_name);
  if (!id)
    throw GretlError(ErrorKind::UnknownClass,
                     "no edge class named '" + qualified_name + "' in schema");
  return *id;
}

bool Schema::is_subclass_of(VertexClassId sub, VertexClassId super) const {
  return reaches(vertex_classes_, sub.index, super.index);
}

bool Schema::is_subclass_of(EdgeClassId sub, EdgeClassId super) const {
  return reaches(edge_classes_, sub.index, super.index);
}

std::vector<AttributeDef> Schema::visible_attributes(VertexClassId id) const {
  return collect_visible(vertex_classes_, id, nullptr, nullptr);
}

std::vector<AttributeDef> Schema::visible_attributes(EdgeClassId id) const {
  return collect_visible(edge_classes_, id, nullptr, nullptr);
}

std::optional<AttributeDef> Schema::find_visible_attribute(VertexClassId id,
                                                           const std::string& name) const {
  for (const auto& a : visible_attributes(id))
    if (a.name == name) return a;
  return std::nullopt;
}

std::optional<AttributeDef> Schema::find_visible_attribute(EdgeClassId id,
                                                           const std::string& name) const {
  for (const auto& a : visible_attributes(id))
    if (a.name == name) return a;
  return std::nullopt;
}

std::vector<VertexClassId> Schema::vertex_classes_with_simple_name(
    const std::string& simple) const {
  std::vector<VertexClassId> out;
  for (uint32_t i = 0; i < vertex_classes_.size(); ++i)
    if (simple_name_of(vertex_classes_[i].qualified_name) == simple)
      out.push_back(VertexClassId{i});
  return out;
}

}  // namespace gretl
