// SPDX-License-Identifier: Apache-2.0
#include "gretl/transform.hpp"

#include <algorithm>
#include <tuple>

#include "parser_common.hpp"

namespace gretl {

namespace {

Domain parse_domain(TokenCursor& cur) {
  Token t = cur.expect(Tok::Ident, "attribute domain (String, Integer or Boolean)");
  if (t.text == "String") return Domain::String;
  if (t.text == "Integer") return Domain::Integer;
  if (t.text == "Boolean") return Domain::Boolean;
  throw GretlError(ErrorKind::SyntaxError, "unknown attribute domain '" + t.text + "'", t.loc);
}

// The DSL default literal is a single-quoted wrapper around an ordinary
// literal: '"--"' carries the string "--".
Value parse_default_literal(const Token& raw) {
  auto tokens = lex(raw.text);
  if (tokens.size() != 2)  // literal + eof
    throw GretlError(ErrorKind::SyntaxError, "malformed default value literal", raw.loc);
  const Token& lit = tokens.front();
  switch (lit.kind) {
    case Tok::String: return Value::string(lit.text);
    case Tok::Int: return Value::integer(lit.int_value);
    case Tok::KwTrue: return Value::boolean(true);
    case Tok::KwFalse: return Value::boolean(false);
    default:
      throw GretlError(ErrorKind::SyntaxError, "default value must be a literal", raw.loc);
  }
}

std::string parse_import_package(TokenCursor& cur) {
  std::string pkg = cur.expect(Tok::Ident, "package name").text;
  for (;;) {
    cur.expect(Tok::Dot, "'.'");
    if (cur.accept(Tok::Star)) break;
    pkg += "." + cur.expect(Tok::Ident, "package segment").text;
  }
  return pkg;
}

// Owner.attr, with optional package segments on the owner.
std::pair<std::string, std::string> parse_attribute_ref(TokenCursor& cur) {
  std::vector<std::string> segments{cur.expect(Tok::Ident, "class name").text};
  while (cur.accept(Tok::Dot)) segments.push_back(cur.expect(Tok::Ident, "name segment").text);
  if (segments.size() < 2)
    throw GretlError(ErrorKind::SyntaxError, "expected <Class>.<attribute>", cur.loc());
  std::string attr = segments.back();
  segments.pop_back();
  std::string owner = segments.front();
  for (size_t i = 1; i < segments.size(); ++i) owner += "." + segments[i];
  return {owner, attr};
}

QueryAst parse_statement_query(TokenCursor& cur) {
  cur.expect(Tok::TransArrow, "'<=='");
  return parse_expression(cur);
}

}  // namespace

Transformation parse_transformation(const std::string& text) {
  TokenCursor cur(lex(text));
  Transformation t;

  while (!cur.at(Tok::Eof)) {
    SourceLoc loc = cur.loc();
    if (cur.at_ident("import")) {
      cur.take();
      std::string pkg = parse_import_package(cur);
      cur.expect(Tok::Semicolon, "';'");
      if (std::find(t.imports.begin(), t.imports.end(), pkg) == t.imports.end())
        t.imports.push_back(pkg);
      continue;
    }
    Statement stmt;
    stmt.loc = loc;
    if (cur.at_ident("CreateVertexClass")) {
      cur.take();
      CreateVertexClassStmt s;
      s.name = cur.expect(Tok::Ident, "vertex class name").text;
      s.query = parse_statement_query(cur);
      stmt.node = std::move(s);
    } else if (cur.at_ident("CreateEdgeClass")) {
      cur.take();
      CreateEdgeClassStmt s;
      s.name = cur.expect(Tok::Ident, "edge class name").text;
      cur.expect(Tok::KwFrom, "'from'");
      s.from_class = cur.expect(Tok::Ident, "from-class name").text;
      if (!cur.at_ident("role"))
        throw GretlError(ErrorKind::SyntaxError, "expected 'role'", cur.loc());
      cur.take();
      s.from_role = cur.expect(Tok::Ident, "role name").text;
      if (!cur.at_ident("to")) throw GretlError(ErrorKind::SyntaxError, "expected 'to'", cur.loc());
      cur.take();
      s.to_class = cur.expect(Tok::Ident, "to-class name").text;
      if (!cur.at_ident("role"))
        throw GretlError(ErrorKind::SyntaxError, "expected 'role'", cur.loc());
      cur.take();
      s.to_role = cur.expect(Tok::Ident, "role name").text;
      s.query = parse_statement_query(cur);
      stmt.node = std::move(s);
    } else if (cur.at_ident("CreateAttribute")) {
      cur.take();
      CreateAttributeStmt s;
      std::tie(s.owner_class, s.attribute) = parse_attribute_ref(cur);
      cur.expect(Tok::Colon, "':'");
      s.domain = parse_domain(cur);
      if (cur.accept(Tok::Equal)) {
        Token raw = cur.expect(Tok::DslLiteral, "quoted default value");
        s.default_value = parse_default_literal(raw);
        if (!value_matches_domain(*s.default_value, s.domain))
          throw GretlError(ErrorKind::DomainMismatch,
                           "default value does not match the declared domain", raw.loc);
      }
      if (cur.at(Tok::TransArrow)) s.query = parse_statement_query(cur);
      stmt.node = std::move(s);
    } else if (cur.at_ident("SetAttributes")) {
      cur.take();
      SetAttributesStmt s;
      std::tie(s.owner_class, s.attribute) = parse_attribute_ref(cur);
      s.query = parse_statement_query(cur);
      stmt.node = std::move(s);
    } else if (cur.at_ident("AddSubClass")) {
      cur.take();
      AddSubClassStmt s;
      s.subclass = cur.expect(Tok::Ident, "subclass name").text;
      s.superclass = cur.expect(Tok::Ident, "superclass name").text;
      stmt.node = std::move(s);
    } else if (cur.at(Tok::Ident) && cur.peek(1).kind == Tok::Assign) {
      GlobalBindingStmt s;
      s.name = cur.take().text;
      cur.take();  // :=
      s.query = parse_expression(cur);
      stmt.node = std::move(s);
    } else {
      throw GretlError(ErrorKind::SyntaxError,
                       "expected a transformation statement, found '" +
                           TokenCursor::describe(cur.peek()) + "'",
                       loc);
    }
    cur.expect(Tok::Semicolon, "';'");
    t.statements.push_back(std::move(stmt));
  }
  return t;
}

}  // namespace gretl
