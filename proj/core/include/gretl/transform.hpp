// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gretl/query_ast.hpp"
#include "gretl/schema.hpp"

namespace gretl {

// `name := <query>;`
struct GlobalBindingStmt {
  std::string name;
  QueryAst query;
};

// `CreateVertexClass Name <== <set query>;`
struct CreateVertexClassStmt {
  std::string name;
  QueryAst query;
};

// `CreateEdgeClass Name from A role r1 to B role r2 <== <triple-set query>;`
struct CreateEdgeClassStmt {
  std::string name;
  std::string from_class;
  std::string from_role;
  std::string to_class;
  std::string to_role;
  QueryAst query;
};

// `AddSubClass Sub Super;`
struct AddSubClassStmt {
  std::string subclass;
  std::string superclass;
};

// `CreateAttribute Owner.attr : Domain [= '<literal>'] [<== <map query>];`
struct CreateAttributeStmt {
  std::string owner_class;
  std::string attribute;
  Domain domain = Domain::String;
  std::optional<Value> default_value;
  QueryAst query;  // may be null: declaration + default only
};

// `SetAttributes Owner.attr <== <map query>;` — requires an existing attribute.
struct SetAttributesStmt {
  std::string owner_class;
  std::string attribute;
  QueryAst query;
};

struct Statement {
  std::variant<GlobalBindingStmt, CreateVertexClassStmt, CreateEdgeClassStmt, AddSubClassStmt,
               CreateAttributeStmt, SetAttributesStmt>
      node;
  SourceLoc loc;
};

struct Transformation {
  std::vector<std::string> imports;  // package names, `.*` stripped
  std::vector<Statement> statements;
};

// Text format: UTF-8, `//` line comments, statements terminated by `;`,
// `<==` separates operation headers from their queries.
Transformation parse_transformation(const std::string& text);

}  // namespace gretl
