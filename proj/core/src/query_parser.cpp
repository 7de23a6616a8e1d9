// SPDX-License-Identifier: Apache-2.0
#include "gretl/query_parser.hpp"

#include <set>

#include "parser_common.hpp"

namespace gretl {

namespace {

template <typename NodeT>
ExprPtr make_expr(NodeT node, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->node = std::move(node);
  e->loc = loc;
  return e;
}

template <typename NodeT>
PathElemPtr make_elem(NodeT node, SourceLoc loc) {
  auto e = std::make_shared<PathElem>();
  e->node = std::move(node);
  e->loc = loc;
  return e;
}

bool starts_path_element(const TokenCursor& cur) {
  switch (cur.peek().kind) {
    case Tok::ForwardArrow:
    case Tok::Containment:
    case Tok::LBrace:
    case Tok::Amp:
      return true;
    case Tok::LParen:
      // A parenthesized group; `(expr)` anchors never occur inside paths.
      switch (cur.peek(1).kind) {
        case Tok::ForwardArrow:
        case Tok::Containment:
        case Tok::LBrace:
        case Tok::Amp:
          return true;
        default:
          return false;
      }
    default:
      return false;
  }
}

ExprPtr parse_postfix(TokenCursor& cur);

PathElemPtr wrap_iteration(TokenCursor& cur, PathElemPtr body) {
  if (cur.at(Tok::Plus) || cur.at(Tok::Star)) {
    auto loc = cur.loc();
    bool plus = cur.take().kind == Tok::Plus;
    return make_elem(PathIteration{std::move(body), plus}, loc);
  }
  return body;
}

PathExpr parse_path_sequence(TokenCursor& cur) {
  PathSequence seq;
  for (;;) {
    if (cur.at(Tok::Amp)) {
      cur.take();  // separator between restriction and neighbouring elements
      continue;
    }
    auto loc = cur.loc();
    if (cur.at(Tok::ForwardArrow) || cur.at(Tok::Containment)) {
      EdgeStep step;
      step.containment_only = cur.take().kind == Tok::Containment;
      if (cur.accept(Tok::LBrace)) {
        step.role = cur.expect(Tok::Ident, "role name").text;
        cur.expect(Tok::RBrace, "'}'");
      }
      seq.elems.push_back(wrap_iteration(cur, make_elem(step, loc)));
      continue;
    }
    if (cur.at(Tok::LBrace)) {
      cur.take();
      VertexRestriction restr;
      restr.types.push_back(parse_type_name(cur));
      while (cur.accept(Tok::Comma)) restr.types.push_back(parse_type_name(cur));
      if (cur.accept(Tok::At)) restr.predicate = parse_expression(cur);
      cur.expect(Tok::RBrace, "'}'");
      seq.elems.push_back(wrap_iteration(cur, make_elem(std::move(restr), loc)));
      continue;
    }
    if (cur.at(Tok::LParen) && starts_path_element(cur)) {
      cur.take();
      PathSequence inner = parse_path_sequence(cur);
      cur.expect(Tok::RParen, "')'");
      seq.elems.push_back(wrap_iteration(cur, make_elem(std::move(inner), loc)));
      continue;
    }
    break;
  }
  if (seq.elems.empty())
    throw GretlError(ErrorKind::SyntaxError, "expected a path element", cur.loc());
  return seq;
}

Comprehension parse_comprehension(TokenCursor& cur) {
  Comprehension comp;
  do {
    Declaration decl;
    decl.variables.push_back(cur.expect(Tok::Ident, "variable name").text);
    while (cur.accept(Tok::Comma))
      decl.variables.push_back(cur.expect(Tok::Ident, "variable name").text);
    cur.expect(Tok::Colon, "':'");
    decl.domain = parse_expression(cur);
    comp.declarations.push_back(std::move(decl));
  } while (cur.accept(Tok::Comma));

  if (cur.accept(Tok::KwWith)) comp.filter = parse_expression(cur);

  if (cur.accept(Tok::KwReportSet)) {
    comp.report.is_map = false;
    comp.report.set_exprs.push_back(parse_expression(cur));
    while (cur.accept(Tok::Comma)) comp.report.set_exprs.push_back(parse_expression(cur));
  } else if (cur.accept(Tok::KwReportMap)) {
    comp.report.is_map = true;
    comp.report.key = parse_expression(cur);
    cur.expect(Tok::MapArrow, "'->'");
    comp.report.value = parse_expression(cur);
  } else {
    throw GretlError(ErrorKind::SyntaxError, "expected reportSet or reportMap", cur.loc());
  }
  cur.expect(Tok::KwEnd, "'end'");

  if (cur.accept(Tok::KwWhere)) {
    for (;;) {
      WhereBinding b;
      b.variable = cur.expect(Tok::Ident, "binding name").text;
      cur.expect(Tok::Assign, "':='");
      b.expr = parse_expression(cur);
      comp.where.push_back(std::move(b));
      // A ';' only continues the where list when another binding follows;
      // otherwise it terminates the enclosing transformation statement.
      if (cur.at(Tok::Semicolon) && cur.peek(1).kind == Tok::Ident &&
          cur.peek(2).kind == Tok::Assign) {
        cur.take();
        continue;
      }
      break;
    }
  }
  return comp;
}

ExprPtr parse_primary(TokenCursor& cur) {
  auto loc = cur.loc();
  if (cur.at(Tok::KwFrom)) {
    cur.take();
    return make_expr(parse_comprehension(cur), loc);
  }
  if (cur.at(Tok::Ident)) {
    Token name = cur.take();
    if (name.text == "V" && cur.at(Tok::LBrace)) {
      cur.take();
      ClassExtent extent{parse_type_name(cur)};
      cur.expect(Tok::RBrace, "'}'");
      return make_expr(std::move(extent), loc);
    }
    // The function namespace is closed, so only builtin names followed by
    // '(' are calls; anything else keeps the '(' for a path group.
    static const std::set<std::string> builtins = {"theElement", "isEmpty", "keySet", "tup"};
    if (cur.at(Tok::LParen) && builtins.count(name.text)) {
      cur.take();
      FunctionCall call;
      call.name = name.text;
      if (!cur.at(Tok::RParen)) {
        call.args.push_back(parse_expression(cur));
        while (cur.accept(Tok::Comma)) call.args.push_back(parse_expression(cur));
      }
      cur.expect(Tok::RParen, "')'");
      return make_expr(std::move(call), loc);
    }
    return make_expr(VarRef{name.text}, loc);
  }
  if (cur.at(Tok::Int)) return make_expr(IntLit{cur.take().int_value}, loc);
  if (cur.at(Tok::String)) return make_expr(StringLit{cur.take().text}, loc);
  if (cur.at(Tok::KwTrue)) {
    cur.take();
    return make_expr(BoolLit{true}, loc);
  }
  if (cur.at(Tok::KwFalse)) {
    cur.take();
    return make_expr(BoolLit{false}, loc);
  }
  if (cur.at(Tok::LParen)) {
    cur.take();
    ExprPtr inner = parse_expression(cur);
    cur.expect(Tok::RParen, "')'");
    return inner;
  }
  throw GretlError(ErrorKind::SyntaxError,
                   "expected an expression, found '" + TokenCursor::describe(cur.peek()) + "'",
                   cur.loc());
}

ExprPtr parse_postfix(TokenCursor& cur) {
  ExprPtr base = parse_primary(cur);
  for (;;) {
    auto loc = cur.loc();
    if (cur.at(Tok::Dot)) {
      cur.take();
      std::string attr = cur.expect(Tok::Ident, "attribute name").text;
      base = make_expr(AttrAccess{std::move(base), std::move(attr)}, loc);
      continue;
    }
    if (cur.at(Tok::LBracket)) {
      cur.take();
      Token idx = cur.expect(Tok::Int, "tuple index");
      cur.expect(Tok::RBracket, "']'");
      base = make_expr(IndexAccess{std::move(base), idx.int_value}, loc);
      continue;
    }
    break;
  }
  return base;
}

// A path may be anchored by a trailing vertex-valued expression
// (`call -->{target} instanceMethod`). Anchors are identifier-rooted.
ExprPtr try_parse_anchor(TokenCursor& cur) {
  if (cur.at(Tok::Ident)) return parse_postfix(cur);
  return nullptr;
}

ExprPtr parse_path_level(TokenCursor& cur) {
  auto loc = cur.loc();
  if (starts_path_element(cur)) {
    PathApplication app;
    app.path = parse_path_sequence(cur);
    app.anchor = try_parse_anchor(cur);
    return make_expr(std::move(app), loc);
  }
  ExprPtr base = parse_postfix(cur);
  if (starts_path_element(cur)) {
    PathApplication app;
    app.start = std::move(base);
    app.path = parse_path_sequence(cur);
    app.anchor = try_parse_anchor(cur);
    return make_expr(std::move(app), loc);
  }
  return base;
}

ExprPtr parse_comparison(TokenCursor& cur) {
  ExprPtr lhs = parse_path_level(cur);
  if (cur.at(Tok::Equal) || cur.at(Tok::NotEqual)) {
    auto loc = cur.loc();
    bool equal = cur.take().kind == Tok::Equal;
    ExprPtr rhs = parse_path_level(cur);
    return make_expr(Comparison{equal, std::move(lhs), std::move(rhs)}, loc);
  }
  return lhs;
}

ExprPtr parse_not(TokenCursor& cur) {
  if (cur.at(Tok::KwNot)) {
    auto loc = cur.loc();
    cur.take();
    return make_expr(NotExpr{parse_not(cur)}, loc);
  }
  return parse_comparison(cur);
}

ExprPtr parse_and(TokenCursor& cur) {
  ExprPtr lhs = parse_not(cur);
  while (cur.at(Tok::KwAnd)) {
    auto loc = cur.loc();
    cur.take();
    lhs = make_expr(BoolBinary{true, std::move(lhs), parse_not(cur)}, loc);
  }
  return lhs;
}

ExprPtr parse_or(TokenCursor& cur) {
  ExprPtr lhs = parse_and(cur);
  while (cur.at(Tok::KwOr)) {
    auto loc = cur.loc();
    cur.take();
    lhs = make_expr(BoolBinary{false, std::move(lhs), parse_and(cur)}, loc);
  }
  return lhs;
}

}  // namespace

std::string parse_type_name(TokenCursor& cur) {
  std::string name = cur.expect(Tok::Ident, "type name").text;
  while (cur.at(Tok::Dot) && cur.peek(1).kind == Tok::Ident) {
    cur.take();
    name += "." + cur.take().text;
  }
  return name;
}

ExprPtr parse_expression(TokenCursor& cur) { return parse_or(cur); }

QueryAst parse_query(const std::string& text) {
  TokenCursor cur(lex(text));
  ExprPtr e = parse_expression(cur);
  if (!cur.at(Tok::Eof))
    throw GretlError(ErrorKind::SyntaxError,
                     "unexpected trailing input '" + TokenCursor::describe(cur.peek()) + "'",
                     cur.loc());
  return e;
}

}  // namespace gretl
