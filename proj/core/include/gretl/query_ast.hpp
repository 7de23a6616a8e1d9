// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gretl/error.hpp"

namespace gretl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// --- Regular path expressions -----------------------------------------------

struct PathElem;
using PathElemPtr = std::shared_ptr<const PathElem>;

// `-->` follows any outgoing edge, `<>--` only containment edges; an optional
// role restricts to edge classes with that far-end (to-)role.
struct EdgeStep {
  bool containment_only = false;
  std::optional<std::string> role;
};

// `{T1, T2 @ pred}` filters the vertex set at this point of the walk.
// thisVertex is bound while evaluating pred.
struct VertexRestriction {
  std::vector<std::string> types;
  ExprPtr predicate;  // may be null
};

struct PathSequence {
  std::vector<PathElemPtr> elems;
};

struct PathIteration {
  PathElemPtr body;
  bool one_or_more = false;  // + vs *
};

struct PathElem {
  std::variant<EdgeStep, VertexRestriction, PathSequence, PathIteration> node;
  SourceLoc loc;
};

using PathExpr = PathSequence;

// --- Expressions -------------------------------------------------------------

struct VarRef {
  std::string name;
};
struct StringLit {
  std::string value;
};
struct IntLit {
  int64_t value = 0;
};
struct BoolLit {
  bool value = false;
};
// V{TypeName}: all instances of the type, creation order.
struct ClassExtent {
  std::string type_name;
};
struct AttrAccess {
  ExprPtr base;
  std::string attribute;
};
struct IndexAccess {
  ExprPtr base;
  int64_t index = 0;
};
struct FunctionCall {
  std::string name;
  std::vector<ExprPtr> args;
};
struct NotExpr {
  ExprPtr operand;
};
struct BoolBinary {
  bool is_and = true;  // false = or
  ExprPtr lhs, rhs;
};
struct Comparison {
  bool equal = true;  // false = <>
  ExprPtr lhs, rhs;
};

// One node covers the three path uses:
//   start + path          -> forward image (set of vertices)
//   start + path + anchor -> existence (boolean)
//   path + anchor         -> backward image (vertices from which the
//                            path reaches the anchor)
struct PathApplication {
  ExprPtr start;   // may be null
  PathExpr path;
  ExprPtr anchor;  // may be null
};

struct ReportClause {
  bool is_map = false;
  std::vector<ExprPtr> set_exprs;  // n>=2 yields tuples
  ExprPtr key, value;              // for reportMap
};

struct Declaration {
  std::vector<std::string> variables;
  ExprPtr domain;
};

struct WhereBinding {
  std::string variable;
  ExprPtr expr;
};

struct Comprehension {
  std::vector<Declaration> declarations;
  ExprPtr filter;  // may be null
  ReportClause report;
  std::vector<WhereBinding> where;
};

struct Expr {
  std::variant<VarRef, StringLit, IntLit, BoolLit, ClassExtent, AttrAccess, IndexAccess,
               FunctionCall, NotExpr, BoolBinary, Comparison, PathApplication, Comprehension>
      node;
  SourceLoc loc;
};

using QueryAst = ExprPtr;

}  // namespace gretl
