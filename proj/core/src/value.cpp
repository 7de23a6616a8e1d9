// SPDX-License-Identifier: Apache-2.0
#include "gretl/value.hpp"

#include <algorithm>

#include "gretl/graph.hpp"

namespace gretl {

namespace {

uint64_t graph_serial(const Graph* g) { return g ? g->serial() : 0; }

int cmp_u64(uint64_t a, uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

int cmp_i64(int64_t a, int64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

bool SetValue::insert(Value v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) return false;
  items_.insert(it, std::move(v));
  return true;
}

bool SetValue::contains(const Value& v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool MapValue::insert(Value key, Value value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it != entries_.end() && it->first == key) return it->second == value;
  entries_.insert(it, {std::move(key), std::move(value)});
  return true;
}

const Value* MapValue::find(const Value& key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it != entries_.end() && it->first == key) return &it->second;
  return nullptr;
}

int Value::compare(const Value& a, const Value& b) {
  if (a.storage_.index() != b.storage_.index())
    return a.storage_.index() < b.storage_.index() ? -1 : 1;
  switch (a.storage_.index()) {
    case 0:  // Undefined
      return 0;
    case 1:
      return cmp_i64(a.as_boolean() ? 1 : 0, b.as_boolean() ? 1 : 0);
    case 2:
      return cmp_i64(a.as_integer(), b.as_integer());
    case 3:
      return a.as_string().compare(b.as_string());
    case 4: {
      const auto& va = a.as_vertex();
      const auto& vb = b.as_vertex();
      if (int c = cmp_u64(graph_serial(va.graph), graph_serial(vb.graph))) return c;
      return cmp_u64(va.index, vb.index);
    }
    case 5: {
      const auto& ea = a.as_edge();
      const auto& eb = b.as_edge();
      if (int c = cmp_u64(graph_serial(ea.graph), graph_serial(eb.graph))) return c;
      return cmp_u64(ea.index, eb.index);
    }
    case 6: {
      const auto& ta = a.as_tuple().items;
      const auto& tb = b.as_tuple().items;
      for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i)
        if (int c = compare(ta[i], tb[i])) return c;
      return cmp_u64(ta.size(), tb.size());
    }
    case 7: {
      const auto& sa = a.as_set().items();
      const auto& sb = b.as_set().items();
      for (size_t i = 0; i < std::min(sa.size(), sb.size()); ++i)
        if (int c = compare(sa[i], sb[i])) return c;
      return cmp_u64(sa.size(), sb.size());
    }
    case 8: {
      const auto& ma = a.as_map().entries();
      const auto& mb = b.as_map().entries();
      for (size_t i = 0; i < std::min(ma.size(), mb.size()); ++i) {
        if (int c = compare(ma[i].first, mb[i].first)) return c;
        if (int c = compare(ma[i].second, mb[i].second)) return c;
      }
      return cmp_u64(ma.size(), mb.size());
    }
  }
  return 0;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string Value::render() const {
  switch (storage_.index()) {
    case 0:
      return "undefined";
    case 1:
      return as_boolean() ? "true" : "false";
    case 2:
      return std::to_string(as_integer());
    case 3:
      return quote(as_string());
    case 4: {
      const auto& v = as_vertex();
      return v.graph ? v.graph->vertex(VertexId{v.index}).id : "v?";
    }
    case 5: {
      const auto& e = as_edge();
      return e.graph ? e.graph->edge(EdgeId{e.index}).id : "e?";
    }
    case 6: {
      std::string out = "[";
      const auto& items = as_tuple().items;
      for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i].render();
      }
      return out + "]";
    }
    case 7: {
      std::string out = "{";
      const auto& items = as_set().items();
      for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i].render();
      }
      return out + "}";
    }
    case 8: {
      std::string out = "{";
      const auto& entries = as_map().entries();
      for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += entries[i].first.render() + " -> " + entries[i].second.render();
      }
      return out + "}";
    }
  }
  return "?";
}

}  // namespace gretl
