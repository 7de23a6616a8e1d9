// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gretl/error.hpp"
#include "gretl/value.hpp"

namespace gretl {

// Archetype/image bookkeeping: for each target class C created by a
// transformation, img_C maps every source-side archetype value to the target
// element created for it, and arch_C is the inverse. Maps are not merged
// along target inheritance.
class TraceMaps {
public:
  bool has_map(const std::string& class_simple_name) const { return img_.count(class_simple_name); }
  void create_map(const std::string& class_simple_name);

  // Throws DuplicateArchetype when the archetype is already keyed.
  void record(const std::string& class_simple_name, Value archetype, Value image);

  // Read view for queries (`img_<Name>`); throws UnknownTraceMap.
  const MapValue& img(const std::string& class_simple_name) const;
  const MapValue& arch(const std::string& class_simple_name) const;

  std::optional<Value> image_of(const std::string& class_simple_name,
                                const Value& archetype) const;

  std::vector<std::string> class_names() const;

  // img and arch must be mutually inverse bijections for every class.
  bool is_bijective(std::string* offending_class = nullptr) const;

private:
  std::map<std::string, MapValue> img_;
  std::map<std::string, MapValue> arch_;
};

}  // namespace gretl
