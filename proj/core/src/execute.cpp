// SPDX-License-Identifier: Apache-2.0
#include "gretl/execute.hpp"

#include "gretl/eval.hpp"

namespace gretl {

namespace {

Value run_query(const QueryAst& query, ExecutionContext& ctx,
                const std::vector<std::string>& imports) {
  Environment env(*ctx.source, imports, &ctx.globals, &ctx.trace);
  return eval(query, env);
}

void exec_global_binding(const GlobalBindingStmt& s, ExecutionContext& ctx,
                         const std::vector<std::string>& imports) {
  if (s.name.rfind("img_", 0) == 0)
    throw GretlError(ErrorKind::DuplicateBinding,
                     "'" + s.name + "' shadows a reserved trace-map name");
  if (ctx.globals.count(s.name))
    throw GretlError(ErrorKind::DuplicateBinding, "'" + s.name + "' is already bound");
  ctx.globals.emplace(s.name, run_query(s.query, ctx, imports));
}

void exec_create_vertex_class(const CreateVertexClassStmt& s, ExecutionContext& ctx,
                              const std::vector<std::string>& imports) {
  Value archetypes = run_query(s.query, ctx, imports);
  if (!archetypes.is_set())
    throw GretlError(ErrorKind::NotASet,
                     "CreateVertexClass " + s.name + " needs a set-valued query");
  VertexClassId cls = ctx.target_schema->add_vertex_class(s.name, /*is_abstract=*/false);
  ctx.trace.create_map(Schema::simple_name_of(s.name));
  for (const Value& archetype : archetypes.as_set().items()) {
    VertexId v = ctx.target->create_vertex(cls);
    ctx.trace.record(Schema::simple_name_of(s.name), archetype,
                     Value::vertex(ctx.target.get(), v.index));
  }
}

void exec_create_edge_class(const CreateEdgeClassStmt& s, ExecutionContext& ctx,
                            const std::vector<std::string>& imports) {
  VertexClassId from = ctx.target_schema->require_vertex_class(s.from_class);
  VertexClassId to = ctx.target_schema->require_vertex_class(s.to_class);
  Value triples = run_query(s.query, ctx, imports);
  if (!triples.is_set())
    throw GretlError(ErrorKind::NotTripleSet,
                     "CreateEdgeClass " + s.name + " needs a query yielding a set of triples");
  EdgeClassId cls = ctx.target_schema->add_edge_class(s.name, from, to, s.from_role, s.to_role,
                                                      EdgeKind::Plain);
  std::string simple = Schema::simple_name_of(s.name);
  std::string from_simple = Schema::simple_name_of(s.from_class);
  std::string to_simple = Schema::simple_name_of(s.to_class);
  ctx.trace.create_map(simple);
  for (const Value& item : triples.as_set().items()) {
    if (!item.is_tuple() || item.as_tuple().items.size() != 3)
      throw GretlError(ErrorKind::NotTripleSet,
                       "CreateEdgeClass " + s.name + ": query member " + item.render() +
                           " is not a triple");
    const auto& triple = item.as_tuple().items;
    auto from_image = ctx.trace.image_of(from_simple, triple[1]);
    if (!from_image)
      throw GretlError(ErrorKind::UnknownArchetype,
                       "start archetype " + triple[1].render() + " has no image in img_" +
                           from_simple);
    auto to_image = ctx.trace.image_of(to_simple, triple[2]);
    if (!to_image)
      throw GretlError(ErrorKind::UnknownArchetype,
                       "end archetype " + triple[2].render() + " has no image in img_" +
                           to_simple);
    EdgeId e = ctx.target->create_edge(cls, VertexId{from_image->as_vertex().index},
                                       VertexId{to_image->as_vertex().index});
    ctx.trace.record(simple, triple[0], Value::edge(ctx.target.get(), e.index));
  }
}

// Shared by CreateAttribute and SetAttributes: applies a map of
// archetype -> value onto the images of the owner class.
void apply_attribute_map(const std::string& owner, const std::string& attribute, Domain domain,
                         const Value& mapping, ExecutionContext& ctx) {
  if (!mapping.is_map())
    throw GretlError(ErrorKind::NotAMap,
                     owner + "." + attribute + " needs a map-valued query");
  std::string simple = Schema::simple_name_of(owner);
  if (!ctx.trace.has_map(simple))
    throw GretlError(ErrorKind::UnknownTraceMap, "img_" + simple + " does not exist (yet)");
  for (const auto& [archetype, value] : mapping.as_map().entries()) {
    auto image = ctx.trace.image_of(simple, archetype);
    if (!image)
      throw GretlError(ErrorKind::UnknownArchetype,
                       "archetype " + archetype.render() + " has no image in img_" + simple);
    if (!value_matches_domain(value, domain))
      throw GretlError(ErrorKind::DomainMismatch,
                       "value " + value.render() + " for " + owner + "." + attribute +
                           " does not have domain " + domain_name(domain));
    if (image->is_vertex())
      ctx.target->set_attribute(VertexId{image->as_vertex().index}, attribute, value);
    else
      ctx.target->set_attribute(EdgeId{image->as_edge().index}, attribute, value);
  }
}

void exec_create_attribute(const CreateAttributeStmt& s, ExecutionContext& ctx,
                           const std::vector<std::string>& imports) {
  auto owner = ctx.target_schema->find_class(s.owner_class);
  if (!owner)
    throw GretlError(ErrorKind::UnknownClass,
                     "no class named '" + s.owner_class + "' in the target schema");
  ctx.target_schema->add_attribute(*owner, s.attribute, s.domain, s.default_value);
  if (s.query)
    apply_attribute_map(s.owner_class, s.attribute, s.domain, run_query(s.query, ctx, imports),
                        ctx);
}

void exec_set_attributes(const SetAttributesStmt& s, ExecutionContext& ctx,
                         const std::vector<std::string>& imports) {
  auto owner = ctx.target_schema->find_class(s.owner_class);
  if (!owner)
    throw GretlError(ErrorKind::UnknownClass,
                     "no class named '" + s.owner_class + "' in the target schema");
  std::optional<AttributeDef> def =
      owner->is_edge
          ? ctx.target_schema->find_visible_attribute(EdgeClassId{owner->index}, s.attribute)
          : ctx.target_schema->find_visible_attribute(VertexClassId{owner->index}, s.attribute);
  if (!def)
    throw GretlError(ErrorKind::UnknownAttribute,
                     "SetAttributes requires an existing attribute; '" + s.owner_class + "." +
                         s.attribute + "' was never created");
  apply_attribute_map(s.owner_class, s.attribute, def->domain,
                      run_query(s.query, ctx, imports), ctx);
}

void exec_add_subclass(const AddSubClassStmt& s, ExecutionContext& ctx) {
  auto sub = ctx.target_schema->find_class(s.subclass);
  auto super = ctx.target_schema->find_class(s.superclass);
  if (!sub)
    throw GretlError(ErrorKind::UnknownClass,
                     "no class named '" + s.subclass + "' in the target schema");
  if (!super)
    throw GretlError(ErrorKind::UnknownClass,
                     "no class named '" + s.superclass + "' in the target schema");
  ctx.target_schema->add_specialization(*sub, *super);
}

}  // namespace

ExecutionContext execute(const Transformation& t, const Graph& source,
                         const ExecutionObserver& observer) {
  ExecutionContext ctx;
  ctx.source = &source;
  ctx.target_schema = std::make_shared<Schema>("Target");
  ctx.target = std::make_unique<Graph>(ctx.target_schema);

  for (size_t i = 0; i < t.statements.size(); ++i) {
    const Statement& stmt = t.statements[i];
    try {
      if (const auto* s = std::get_if<GlobalBindingStmt>(&stmt.node))
        exec_global_binding(*s, ctx, t.imports);
      else if (const auto* s = std::get_if<CreateVertexClassStmt>(&stmt.node))
        exec_create_vertex_class(*s, ctx, t.imports);
      else if (const auto* s = std::get_if<CreateEdgeClassStmt>(&stmt.node))
        exec_create_edge_class(*s, ctx, t.imports);
      else if (const auto* s = std::get_if<CreateAttributeStmt>(&stmt.node))
        exec_create_attribute(*s, ctx, t.imports);
      else if (const auto* s = std::get_if<SetAttributesStmt>(&stmt.node))
        exec_set_attributes(*s, ctx, t.imports);
      else
        exec_add_subclass(std::get<AddSubClassStmt>(stmt.node), ctx);
    } catch (GretlError& e) {
      GretlError annotated(e.kind(),
                           "statement " + std::to_string(i) + ": " + e.what(),
                           e.location().value_or(stmt.loc));
      throw annotated;
    }
    if (observer) observer(i, ctx);
  }
  ctx.target->validate();
  return ctx;
}

}  // namespace gretl
