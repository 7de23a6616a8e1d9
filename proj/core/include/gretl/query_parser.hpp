// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gretl/query_ast.hpp"

namespace gretl {

// Parses one query expression. Unqualified type names stay unresolved in the
// AST; resolution against imports happens during evaluation. Malformed input
// raises SyntaxError with line/column, never crashes.
QueryAst parse_query(const std::string& text);

}  // namespace gretl
