// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gretl {

class Graph;
class Value;

// References into a specific graph. Identity is (graph, index); ordering uses
// the graph's per-process serial so containers stay deterministic within a run.
struct VertexRef {
  const Graph* graph = nullptr;
  uint32_t index = 0;
};

struct EdgeRef {
  const Graph* graph = nullptr;
  uint32_t index = 0;
};

struct Undefined {};

struct Tuple {
  std::vector<Value> items;
};

// Duplicate-free, kept sorted by structural order. Element sets therefore
// iterate in ascending creation order, which pins target-graph creation order.
class SetValue {
public:
  bool insert(Value v);  // false if already present
  bool contains(const Value& v) const;
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Value>& items() const { return items_; }

private:
  std::vector<Value> items_;
};

class MapValue {
public:
  // Returns false when the key exists with a structurally different value
  // (the caller decides whether that is MapKeyConflict); equal re-insertions
  // collapse silently.
  bool insert(Value key, Value value);
  const Value* find(const Value& key) const;
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<Value, Value>>& entries() const { return entries_; }

private:
  std::vector<std::pair<Value, Value>> entries_;  // sorted by key
};

class Value {
public:
  using Storage = std::variant<Undefined, bool, int64_t, std::string, VertexRef,
                               EdgeRef, Tuple, SetValue, MapValue>;

  Value() : storage_(Undefined{}) {}
  Value(Storage s) : storage_(std::move(s)) {}

  static Value undefined() { return Value(); }
  static Value boolean(bool b) { return Value(Storage(b)); }
  static Value integer(int64_t i) { return Value(Storage(i)); }
  static Value string(std::string s) { return Value(Storage(std::move(s))); }
  static Value vertex(const Graph* g, uint32_t index) { return Value(Storage(VertexRef{g, index})); }
  static Value edge(const Graph* g, uint32_t index) { return Value(Storage(EdgeRef{g, index})); }
  static Value tuple(std::vector<Value> items) { return Value(Storage(Tuple{std::move(items)})); }
  static Value set(SetValue s) { return Value(Storage(std::move(s))); }
  static Value map(MapValue m) { return Value(Storage(std::move(m))); }

  bool is_undefined() const { return std::holds_alternative<Undefined>(storage_); }
  bool is_boolean() const { return std::holds_alternative<bool>(storage_); }
  bool is_integer() const { return std::holds_alternative<int64_t>(storage_); }
  bool is_string() const { return std::holds_alternative<std::string>(storage_); }
  bool is_vertex() const { return std::holds_alternative<VertexRef>(storage_); }
  bool is_edge() const { return std::holds_alternative<EdgeRef>(storage_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(storage_); }
  bool is_set() const { return std::holds_alternative<SetValue>(storage_); }
  bool is_map() const { return std::holds_alternative<MapValue>(storage_); }

  bool as_boolean() const { return std::get<bool>(storage_); }
  int64_t as_integer() const { return std::get<int64_t>(storage_); }
  const std::string& as_string() const { return std::get<std::string>(storage_); }
  const VertexRef& as_vertex() const { return std::get<VertexRef>(storage_); }
  const EdgeRef& as_edge() const { return std::get<EdgeRef>(storage_); }
  const Tuple& as_tuple() const { return std::get<Tuple>(storage_); }
  const SetValue& as_set() const { return std::get<SetValue>(storage_); }
  const MapValue& as_map() const { return std::get<MapValue>(storage_); }

  const Storage& storage() const { return storage_; }

  // Total structural order. Element refs compare by (graph serial, index);
  // sets and maps compare as their sorted contents.
  static int compare(const Value& a, const Value& b);

  friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
  friend bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

  // Human/machine rendering used by the query CLI and the trace export:
  // strings quoted, refs by element id, tuples bracketed, sets braced.
  std::string render() const;

private:
  Storage storage_;
};

}  // namespace gretl
