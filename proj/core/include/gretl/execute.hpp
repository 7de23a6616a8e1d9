// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <string>

#include "gretl/graph.hpp"
#include "gretl/trace.hpp"
#include "gretl/transform.hpp"

namespace gretl {

// State of one transformation run: the read-only source, the incrementally
// built target schema/graph, global bindings, and the trace maps. One context
// is strictly sequential; independent contexts may run in parallel.
struct ExecutionContext {
  const Graph* source = nullptr;
  SchemaPtr target_schema;
  GraphPtr target;
  std::map<std::string, Value> globals;
  TraceMaps trace;
};

// Invoked after each statement; used by tests to check per-statement
// invariants (trace bijectivity, schema/instance co-validity).
using ExecutionObserver = std::function<void(size_t statement_index, const ExecutionContext&)>;

// Applies the statements in order. Errors are annotated with the statement
// index and carry the offending source position.
ExecutionContext execute(const Transformation& t, const Graph& source,
                         const ExecutionObserver& observer = {});

}  // namespace gretl
