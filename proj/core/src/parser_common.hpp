// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gretl/query_ast.hpp"
#include "lexer.hpp"

namespace gretl {

class TokenCursor {
public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(const char* spelling) const {
    return peek().kind == Tok::Ident && peek().text == spelling;
  }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  Token expect(Tok kind, const char* what) {
    if (!at(kind))
      throw GretlError(ErrorKind::SyntaxError,
                       std::string("expected ") + what + ", found '" + describe(peek()) + "'",
                       peek().loc);
    return take();
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }
  SourceLoc loc() const { return peek().loc; }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Eof) return "<end of input>";
    return t.text;
  }

private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

// Full expression grammar (comprehensions, path applications, booleans).
ExprPtr parse_expression(TokenCursor& cur);

// Dotted type name: Ident ("." Ident)*.
std::string parse_type_name(TokenCursor& cur);

}  // namespace gretl
