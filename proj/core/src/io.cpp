// SPDX-License-Identifier: Apache-2.0
#include "gretl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gretl {

using nlohmann::json;

namespace {

[[noreturn]] void bad_document(const std::string& msg) {
  throw GretlError(ErrorKind::ParseError, msg);
}

[[noreturn]] void invalid_document(const std::string& msg) {
  throw GretlError(ErrorKind::ValidationError, msg);
}

json multiplicity_to_json(const Multiplicity& m) {
  json j = json::array();
  j.push_back(m.min);
  if (m.max)
    j.push_back(*m.max);
  else
    j.push_back("*");
  return j;
}

Multiplicity multiplicity_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad_document("multiplicity must be [min, max]");
  Multiplicity m;
  m.min = j[0].get<uint32_t>();
  if (j[1].is_string()) {
    if (j[1].get<std::string>() != "*") bad_document("multiplicity max must be a number or \"*\"");
    m.max = std::nullopt;
  } else {
    m.max = j[1].get<uint32_t>();
  }
  return m;
}

json value_to_json(const Value& v) {
  if (v.is_string()) return v.as_string();
  if (v.is_integer()) return v.as_integer();
  if (v.is_boolean()) return v.as_boolean();
  bad_document("only String/Integer/Boolean values are serializable");
}

Value value_from_json(const json& j) {
  if (j.is_string()) return Value::string(j.get<std::string>());
  if (j.is_boolean()) return Value::boolean(j.get<bool>());
  if (j.is_number_integer()) return Value::integer(j.get<int64_t>());
  bad_document("attribute values must be strings, integers or booleans");
}

Domain domain_from_json(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "String") return Domain::String;
  if (s == "Integer") return Domain::Integer;
  if (s == "Boolean") return Domain::Boolean;
  bad_document("unknown attribute domain '" + s + "'");
}

json attributes_to_json(const std::vector<AttributeDef>& attrs) {
  json out = json::array();
  for (const auto& a : attrs) {
    json j;
    j["name"] = a.name;
    j["domain"] = domain_name(a.domain);
    if (a.default_value) j["default"] = value_to_json(*a.default_value);
    out.push_back(std::move(j));
  }
  return out;
}

json schema_to_json(const Schema& schema) {
  json j;
  j["name"] = schema.name();
  json packages = json::array();
  for (const auto& p : schema.packages())
    if (!p.empty()) packages.push_back(p);
  j["packages"] = std::move(packages);

  json vclasses = json::array();
  for (uint32_t i = 0; i < schema.vertex_class_count(); ++i) {
    const auto& vc = schema.vertex_class(VertexClassId{i});
    json c;
    c["name"] = vc.qualified_name;
    c["abstract"] = vc.is_abstract;
    json supers = json::array();
    for (auto s : vc.superclasses) supers.push_back(schema.vertex_class(s).qualified_name);
    c["superclasses"] = std::move(supers);
    c["attributes"] = attributes_to_json(vc.attributes);
    vclasses.push_back(std::move(c));
  }
  j["vertex_classes"] = std::move(vclasses);

  json eclasses = json::array();
  for (uint32_t i = 0; i < schema.edge_class_count(); ++i) {
    const auto& ec = schema.edge_class(EdgeClassId{i});
    json c;
    c["name"] = ec.qualified_name;
    c["abstract"] = ec.is_abstract;
    json supers = json::array();
    for (auto s : ec.superclasses) supers.push_back(schema.edge_class(s).qualified_name);
    c["superclasses"] = std::move(supers);
    c["attributes"] = attributes_to_json(ec.attributes);
    c["from"] = schema.vertex_class(ec.from_class).qualified_name;
    c["to"] = schema.vertex_class(ec.to_class).qualified_name;
    c["from_role"] = ec.from_role;
    c["to_role"] = ec.to_role;
    c["from_multiplicity"] = multiplicity_to_json(ec.from_multiplicity);
    c["to_multiplicity"] = multiplicity_to_json(ec.to_multiplicity);
    c["kind"] = ec.kind == EdgeKind::Containment ? "containment" : "plain";
    eclasses.push_back(std::move(c));
  }
  j["edge_classes"] = std::move(eclasses);
  return j;
}

SchemaPtr schema_from_json(const json& j) {
  if (!j.is_object()) bad_document("schema section must be an object");
  auto schema = std::make_shared<Schema>(j.value("name", std::string()));
  const json& vclasses = j.value("vertex_classes", json::array());
  const json& eclasses = j.value("edge_classes", json::array());

  try {
    for (const auto& c : vclasses)
      schema->add_vertex_class(c.at("name").get<std::string>(), c.value("abstract", false));
    for (const auto& c : vclasses) {
      auto sub = schema->require_vertex_class(c.at("name").get<std::string>());
      for (const auto& s : c.value("superclasses", json::array()))
        schema->add_specialization(sub, schema->require_vertex_class(s.get<std::string>()));
    }
    for (const auto& c : vclasses) {
      auto cls = schema->require_vertex_class(c.at("name").get<std::string>());
      for (const auto& a : c.value("attributes", json::array())) {
        std::optional<Value> def;
        if (a.contains("default")) def = value_from_json(a.at("default"));
        schema->add_attribute(cls, a.at("name").get<std::string>(),
                              domain_from_json(a.at("domain")), std::move(def));
      }
    }
    for (const auto& c : eclasses) {
      auto from = schema->find_vertex_class(c.at("from").get<std::string>());
      auto to = schema->find_vertex_class(c.at("to").get<std::string>());
      if (!from || !to)
        invalid_document("edge class '" + c.at("name").get<std::string>() +
                         "' references an undefined endpoint class (document invariant: every "
                         "referenced class defined exactly once)");
      std::optional<Multiplicity> from_mult, to_mult;
      if (c.contains("from_multiplicity")) from_mult = multiplicity_from_json(c.at("from_multiplicity"));
      if (c.contains("to_multiplicity")) to_mult = multiplicity_from_json(c.at("to_multiplicity"));
      auto id = schema->add_edge_class(
          c.at("name").get<std::string>(), *from, *to, c.value("from_role", std::string()),
          c.value("to_role", std::string()),
          c.value("kind", std::string("plain")) == "containment" ? EdgeKind::Containment
                                                                 : EdgeKind::Plain,
          from_mult, to_mult);
      if (c.value("abstract", false)) {
        // No mutator for abstractness after the fact; edge classes are
        // concrete unless declared abstract, which the writer never emits
        // for instance-bearing classes anyway.
        (void)id;
        invalid_document("abstract edge classes are not supported by this document format");
      }
    }
    for (const auto& c : eclasses) {
      auto sub = schema->require_edge_class(c.at("name").get<std::string>());
      for (const auto& s : c.value("superclasses", json::array()))
        schema->add_specialization(sub, schema->require_edge_class(s.get<std::string>()));
    }
    for (const auto& c : eclasses) {
      auto cls = schema->require_edge_class(c.at("name").get<std::string>());
      for (const auto& a : c.value("attributes", json::array())) {
        std::optional<Value> def;
        if (a.contains("default")) def = value_from_json(a.at("default"));
        schema->add_attribute(cls, a.at("name").get<std::string>(),
                              domain_from_json(a.at("domain")), std::move(def));
      }
    }
  } catch (const GretlError& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    invalid_document(std::string("schema section rejected: ") + e.what());
  } catch (const json::exception& e) {
    bad_document(std::string("schema section malformed: ") + e.what());
  }
  return schema;
}

}  // namespace

LoadedGraph load_graph_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_document(std::string("not a valid document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema") || !doc.contains("graph"))
    bad_document("document needs top-level 'schema' and 'graph' keys");

  LoadedGraph out;
  out.schema = schema_from_json(doc.at("schema"));
  out.graph = std::make_unique<Graph>(out.schema);

  const json& g = doc.at("graph");
  try {
    for (const auto& v : g.value("vertices", json::array())) {
      std::string cls_name = v.at("class").get<std::string>();
      auto cls = out.schema->find_vertex_class(cls_name);
      if (!cls)
        invalid_document("vertex '" + v.value("id", std::string("?")) +
                         "' has undefined class '" + cls_name +
                         "' (document invariant: every referenced class defined exactly once)");
      VertexId id = out.graph->create_vertex(*cls, v.at("id").get<std::string>());
      if (v.contains("attributes")) {
        for (const auto& [name, value] : v.at("attributes").items())
          out.graph->set_attribute(id, name, value_from_json(value));
      }
    }
    for (const auto& e : g.value("edges", json::array())) {
      std::string cls_name = e.at("class").get<std::string>();
      auto cls = out.schema->find_edge_class(cls_name);
      if (!cls)
        invalid_document("edge '" + e.value("id", std::string("?")) + "' has undefined class '" +
                         cls_name +
                         "' (document invariant: every referenced class defined exactly once)");
      auto from = out.graph->find_vertex_by_external_id(e.at("from").get<std::string>());
      auto to = out.graph->find_vertex_by_external_id(e.at("to").get<std::string>());
      if (!from || !to)
        invalid_document("edge '" + e.value("id", std::string("?")) +
                         "' references a missing vertex id (document invariant: every referenced "
                         "id defined exactly once)");
      EdgeId id = out.graph->create_edge(*cls, *from, *to, e.at("id").get<std::string>());
      if (e.contains("attributes")) {
        for (const auto& [name, value] : e.at("attributes").items())
          out.graph->set_attribute(id, name, value_from_json(value));
      }
    }
  } catch (const GretlError& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    invalid_document(std::string("instance section rejected: ") + e.what());
  } catch (const json::exception& e) {
    bad_document(std::string("instance section malformed: ") + e.what());
  }
  out.graph->validate();
  return out;
}

LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GretlError(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_graph_from_string(buf.str());
  } catch (GretlError& e) {
    throw GretlError(e.kind(), path + ": " + e.what());
  }
}

std::string save_graph_to_string(const Graph& graph) {
  json doc;
  doc["schema"] = schema_to_json(graph.schema());
  json vertices = json::array();
  for (const auto& v : graph.vertices()) {
    json jv;
    jv["id"] = v.id;
    jv["class"] = graph.schema().vertex_class(v.cls).qualified_name;
    json attrs = json::object();
    for (const auto& [name, value] : v.attribute_values) attrs[name] = value_to_json(value);
    jv["attributes"] = std::move(attrs);
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    json je;
    je["id"] = e.id;
    je["class"] = graph.schema().edge_class(e.cls).qualified_name;
    je["from"] = graph.vertex(e.from).id;
    je["to"] = graph.vertex(e.to).id;
    json attrs = json::object();
    for (const auto& [name, value] : e.attribute_values) attrs[name] = value_to_json(value);
    je["attributes"] = std::move(attrs);
    edges.push_back(std::move(je));
  }
  doc["graph"] = json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

void save_graph(const Graph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GretlError(ErrorKind::IoError, "cannot write '" + path + "'");
  out << save_graph_to_string(graph);
  out.flush();
  if (!out) throw GretlError(ErrorKind::IoError, "write to '" + path + "' failed");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string join_label(const std::vector<std::string>& segments) {
  std::string out;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i) out += "\\n";  // DOT line break, added after escaping
    out += dot_escape(segments[i]);
  }
  return out;
}

}  // namespace

std::string export_dot(const Graph& graph, const DotConfig& config) {
  std::ostringstream out;
  out << "digraph " << config.graph_name << " {\n";
  const Schema& schema = graph.schema();
  for (uint32_t i = 0; i < graph.vertex_count(); ++i) {
    const auto& v = graph.vertex(VertexId{i});
    std::vector<std::string> label{
        Schema::simple_name_of(schema.vertex_class(v.cls).qualified_name)};
    if (schema.find_visible_attribute(v.cls, "name")) {
      Value name = graph.get_attribute(VertexId{i}, "name");
      if (name.is_string()) label.push_back(name.as_string());
    }
    out << "  \"" << dot_escape(v.id) << "\" [label=\"" << join_label(label) << "\"];\n";
  }
  for (uint32_t i = 0; i < graph.edge_count(); ++i) {
    const auto& e = graph.edge(EdgeId{i});
    std::vector<std::string> label{
        Schema::simple_name_of(schema.edge_class(e.cls).qualified_name)};
    for (const char* attr : {"trigger", "action"}) {
      if (!schema.find_visible_attribute(e.cls, attr)) continue;
      Value v = graph.get_attribute(EdgeId{i}, attr);
      if (v.is_string()) label.push_back(std::string(attr) + ": " + v.as_string());
    }
    out << "  \"" << dot_escape(graph.vertex(e.from).id) << "\" -> \""
        << dot_escape(graph.vertex(e.to).id) << "\" [label=\"" << join_label(label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_trace_to_string(const TraceMaps& trace) {
  json doc = json::object();
  for (const auto& name : trace.class_names()) {
    json entries = json::object();
    for (const auto& [archetype, image] : trace.img(name).entries())
      entries[archetype.render()] = image.render();
    doc["img_" + name] = std::move(entries);
  }
  return doc.dump(2) + "\n";
}

void export_trace(const TraceMaps& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GretlError(ErrorKind::IoError, "cannot write '" + path + "'");
  out << export_trace_to_string(trace);
  out.flush();
  if (!out) throw GretlError(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace gretl
