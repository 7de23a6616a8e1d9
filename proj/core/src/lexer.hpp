// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gretl/error.hpp"

namespace gretl {

enum class Tok {
  Ident,
  Int,
  String,      // "..."
  DslLiteral,  // '...' raw; used for transformation-level defaults
  KwFrom,
  KwWith,
  KwReportSet,
  KwReportMap,
  KwEnd,
  KwWhere,
  KwAnd,
  KwOr,
  KwNot,
  KwTrue,
  KwFalse,
  Assign,       // :=
  Colon,        // :
  Semicolon,    // ;
  Comma,        // ,
  Dot,          // .
  LParen,       // (
  RParen,       // )
  LBracket,     // [
  RBracket,     // ]
  LBrace,       // {
  RBrace,       // }
  ForwardArrow, // -->
  Containment,  // <>--
  MapArrow,     // ->
  TransArrow,   // <==
  Equal,        // =
  NotEqual,     // <>
  Plus,         // +
  Star,         // *
  Amp,          // &
  At,           // @
  Eof,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;   // identifier spelling / literal content
  int64_t int_value = 0;
  SourceLoc loc;
};

// Shared by the query and transformation grammars. `//` comments are skipped.
// Statement-introducing words (import, CreateVertexClass, role, ...) stay
// plain identifiers so queries may reuse them as variable names (`case`,
// `catch` appear as variables in practice).
std::vector<Token> lex(const std::string& text);

}  // namespace gretl
