// SPDX-License-Identifier: Apache-2.0
#include "gretl/trace.hpp"

namespace gretl {

void TraceMaps::create_map(const std::string& class_simple_name) {
  img_[class_simple_name];
  arch_[class_simple_name];
}

void TraceMaps::record(const std::string& class_simple_name, Value archetype, Value image) {
  auto it = img_.find(class_simple_name);
  if (it == img_.end())
    throw GretlError(ErrorKind::UnknownTraceMap, "no trace map for class '" + class_simple_name + "'");
  if (it->second.find(archetype))
    throw GretlError(ErrorKind::DuplicateArchetype,
                     "archetype " + archetype.render() + " already has an image in img_" +
                         class_simple_name);
  it->second.insert(archetype, image);
  arch_[class_simple_name].insert(std::move(image), std::move(archetype));
}

const MapValue& TraceMaps::img(const std::string& class_simple_name) const {
  auto it = img_.find(class_simple_name);
  if (it == img_.end())
    throw GretlError(ErrorKind::UnknownTraceMap,
                     "img_" + class_simple_name + " does not exist (yet)");
  return it->second;
}

const MapValue& TraceMaps::arch(const std::string& class_simple_name) const {
  auto it = arch_.find(class_simple_name);
  if (it == arch_.end())
    throw GretlError(ErrorKind::UnknownTraceMap,
                     "arch_" + class_simple_name + " does not exist (yet)");
  return it->second;
}

std::optional<Value> TraceMaps::image_of(const std::string& class_simple_name,
                                         const Value& archetype) const {
  auto it = img_.find(class_simple_name);
  if (it == img_.end()) return std::nullopt;
  const Value* v = it->second.find(archetype);
  if (!v) return std::nullopt;
  return *v;
}

std::vector<std::string> TraceMaps::class_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : img_) out.push_back(name);
  return out;
}

bool TraceMaps::is_bijective(std::string* offending_class) const {
  for (const auto& [name, img] : img_) {
    auto ait = arch_.find(name);
    if (ait == arch_.end() || ait->second.size() != img.size()) {
      if (offending_class) *offending_class = name;
      return false;
    }
    for (const auto& [archetype, image] : img.entries()) {
      const Value* back = ait->second.find(image);
      if (!back || !(*back == archetype)) {
        if (offending_class) *offending_class = name;
        return false;
      }
    }
  }
  return true;
}

}  // namespace gretl
