// SPDX-License-Identifier: Apache-2.0
#include "lexer.hpp"

#include <cctype>
#include <map>

namespace gretl {

namespace {

const std::map<std::string, Tok>& keywords() {
  static const std::map<std::string, Tok> kw = {
      {"from", Tok::KwFrom},         {"with", Tok::KwWith},
      {"reportSet", Tok::KwReportSet}, {"reportMap", Tok::KwReportMap},
      {"end", Tok::KwEnd},           {"where", Tok::KwWhere},
      {"and", Tok::KwAnd},           {"or", Tok::KwOr},
      {"not", Tok::KwNot},           {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},
  };
  return kw;
}

}  // namespace

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;

  auto peek = [&](size_t k) -> char { return i + k < text.size() ? text[i + k] : '\0'; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](Tok kind, std::string spelled, SourceLoc loc) {
    Token t;
    t.kind = kind;
    t.text = std::move(spelled);
    t.loc = loc;
    out.push_back(std::move(t));
  };

  while (i < text.size()) {
    char c = text[i];
    SourceLoc loc{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        advance(1);
      std::string word = text.substr(start, i - start);
      auto it = keywords().find(word);
      push(it != keywords().end() ? it->second : Tok::Ident, word, loc);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
      Token t;
      t.kind = Tok::Int;
      t.text = text.substr(start, i - start);
      t.int_value = std::stoll(t.text);
      t.loc = loc;
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      advance(1);
      std::string value;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i];
        if (d == '\\' && (peek(1) == '"' || peek(1) == '\\')) {
          value.push_back(peek(1));
          advance(2);
          continue;
        }
        if (d == '"') {
          advance(1);
          closed = true;
          break;
        }
        if (d == '\n') break;
        value.push_back(d);
        advance(1);
      }
      if (!closed)
        throw GretlError(ErrorKind::SyntaxError, "unterminated string literal", loc);
      push(Tok::String, value, loc);
      continue;
    }
    if (c == '\'') {
      advance(1);
      std::string value;
      bool closed = false;
      while (i < text.size()) {
        if (text[i] == '\'') {
          advance(1);
          closed = true;
          break;
        }
        if (text[i] == '\n') break;
        value.push_back(text[i]);
        advance(1);
      }
      if (!closed)
        throw GretlError(ErrorKind::SyntaxError, "unterminated quoted literal", loc);
      push(Tok::DslLiteral, value, loc);
      continue;
    }
    // Multi-character operators first (maximal munch).
    if (c == '<' && peek(1) == '>' && peek(2) == '-' && peek(3) == '-') {
      advance(4);
      push(Tok::Containment, "<>--", loc);
      continue;
    }
    if (c == '<' && peek(1) == '=' && peek(2) == '=') {
      advance(3);
      push(Tok::TransArrow, "<==", loc);
      continue;
    }
    if (c == '<' && peek(1) == '>') {
      advance(2);
      push(Tok::NotEqual, "<>", loc);
      continue;
    }
    if (c == '-' && peek(1) == '-' && peek(2) == '>') {
      advance(3);
      push(Tok::ForwardArrow, "-->", loc);
      continue;
    }
    if (c == '-' && peek(1) == '>') {
      advance(2);
      push(Tok::MapArrow, "->", loc);
      continue;
    }
    if (c == ':' && peek(1) == '=') {
      advance(2);
      push(Tok::Assign, ":=", loc);
      continue;
    }
    Tok single;
    switch (c) {
      case ':': single = Tok::Colon; break;
      case ';': single = Tok::Semicolon; break;
      case ',': single = Tok::Comma; break;
      case '.': single = Tok::Dot; break;
      case '(': single = Tok::LParen; break;
      case ')': single = Tok::RParen; break;
      case '[': single = Tok::LBracket; break;
      case ']': single = Tok::RBracket; break;
      case '{': single = Tok::LBrace; break;
      case '}': single = Tok::RBrace; break;
      case '=': single = Tok::Equal; break;
      case '+': single = Tok::Plus; break;
      case '*': single = Tok::Star; break;
      case '&': single = Tok::Amp; break;
      case '@': single = Tok::At; break;
      default:
        throw GretlError(ErrorKind::SyntaxError,
                         std::string("unexpected character '") + c + "'", loc);
    }
    advance(1);
    push(single, std::string(1, c), loc);
  }
  Token eof;
  eof.kind = Tok::Eof;
  eof.loc = SourceLoc{line, col};
  out.push_back(eof);
  return out;
}

}  // namespace gretl
