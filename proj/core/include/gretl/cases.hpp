// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gretl/graph.hpp"
#include "gretl/io.hpp"

namespace gretl {

struct TransitionExpectation {
  std::string src;
  std::string dst;
  std::string trigger;
  std::string action;
};

// Expected outcome of running the extraction on one fixture; authored by
// hand-tracing the queries over the fixture program, not by the engine.
struct FixtureManifest {
  std::string id;
  std::string source_file;
  std::string golden_file;
  std::vector<std::string> state_names;
  std::vector<TransitionExpectation> transitions;
  size_t source_vertex_count = 0;
  size_t source_edge_count = 0;
};

struct Fixture {
  FixtureManifest manifest;
  SchemaPtr schema;
  GraphPtr graph;
};

// The shared mini Java syntax schema: classes, methods, statements,
// references and modifiers, with every role the extraction queries traverse.
SchemaPtr mini_java_schema();

// A: turnstile with switch-case, catch-block and non-run() triggers plus one
//    send() action. B: indirect State subclassing through an abstract
//    intermediate, plus a plain in-run() activation (default trigger).
// C: a State hierarchy with no transitions at all.
std::vector<Fixture> build_fixtures();
Fixture build_fixture(const std::string& id);

// Two classes named "State"; running the extraction aborts with NotSingleton.
Fixture build_negative_two_state_classes();

// The bundled ExtractStateMachines rules (45 non-empty lines).
const std::string& reference_transformation();

// Golden target built directly from the manifest with plain graph
// constructors; deliberately independent of the query/transform engine.
LoadedGraph golden_target(const FixtureManifest& manifest);

std::string manifest_to_json(const FixtureManifest& manifest);
FixtureManifest manifest_from_json(const std::string& text);

struct CaseReport {
  std::string fixture_id;
  bool pass = false;
  std::vector<std::string> diffs;
  double millis = 0.0;  // full save -> load -> execute -> save -> compare span
};

// Runs the bundled rules over the fixture through the full text pipeline and
// compares the result with the golden target up to isomorphism (element order
// and ids ignored, attribute multisets exact).
CaseReport run_case(const Fixture& fixture);

// Structural comparison used by run_case; empty result means isomorphic.
std::vector<std::string> diff_graphs(const Graph& actual, const Graph& expected);

}  // namespace gretl
