// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: run transformations, validate graph documents,
// evaluate ad-hoc queries and replay the bundled extraction cases.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gretl/cases.hpp"
#include "gretl/eval.hpp"
#include "gretl/execute.hpp"
#include "gretl/io.hpp"
#include "gretl/query_parser.hpp"
#include "gretl/transform.hpp"

namespace {

using namespace gretl;

bool color_enabled() {
  const char* v = std::getenv("GRETL_MINI_COLOR");
  return v && std::string(v) == "1";
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GretlError(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GretlError(ErrorKind::IoError, "cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw GretlError(ErrorKind::IoError, "write to '" + path + "' failed");
}

struct Options {
  std::string source_path;
  std::string rules_path;
  std::string out_path;
  std::string dot_path;
  std::string trace_path;
  std::string query_text;
  int verbosity = 0;
};

void note(const Options& opt, int level, const std::string& msg) {
  if (opt.verbosity >= level) std::cerr << msg << "\n";
}

int cmd_transform(const Options& opt) {
  note(opt, 1, "loading " + opt.source_path);
  LoadedGraph source = load_graph(opt.source_path);
  note(opt, 1, "parsing " + opt.rules_path);
  Transformation rules = parse_transformation(read_file(opt.rules_path));
  note(opt, 1, "executing " + std::to_string(rules.statements.size()) + " statements");
  ExecutionContext ctx = execute(rules, *source.graph);
  save_graph(*ctx.target, opt.out_path);
  note(opt, 1, "wrote " + opt.out_path);
  if (!opt.dot_path.empty()) write_file(opt.dot_path, export_dot(*ctx.target));
  if (!opt.trace_path.empty()) export_trace(ctx.trace, opt.trace_path);
  return 0;
}

int cmd_validate(const Options& opt) {
  LoadedGraph loaded = load_graph(opt.source_path);
  std::cout << "OK " << loaded.graph->vertex_count() << " " << loaded.graph->edge_count() << "\n";
  return 0;
}

int cmd_query(const Options& opt) {
  LoadedGraph source = load_graph(opt.source_path);
  QueryAst ast = parse_query(opt.query_text);
  // Ad-hoc queries see every schema package as imported.
  std::vector<std::string> imports;
  for (const auto& pkg : source.schema->packages())
    if (!pkg.empty()) imports.push_back(pkg);
  Environment env(*source.graph, imports);
  std::cout << eval(ast, env).render() << "\n";
  return 0;
}

int cmd_case(const Options& opt) {
  bool all_pass = true;
  for (const Fixture& fixture : build_fixtures()) {
    CaseReport report = run_case(fixture);
    all_pass = all_pass && report.pass;
    std::cout << (report.pass ? paint("PASS", "32") : paint("FAIL", "31")) << " "
              << report.fixture_id << "\n";
    // Timings vary run to run, so they go to the diagnostic stream.
    std::cerr << "[time] " << report.fixture_id << " " << static_cast<long>(report.millis + 0.5)
              << " ms\n";
    for (const auto& diff : report.diffs) std::cerr << "  " << diff << "\n";
    if (opt.verbosity >= 1 && report.pass) {
      std::cerr << "  " << fixture.manifest.state_names.size() << " states, "
                << fixture.manifest.transitions.size() << " transitions\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schema-creating graph transformations with GReQL-style queries"};
  app.require_subcommand(1);

  Options opt;

  auto add_verbosity = [&](CLI::App* cmd) {
    cmd->add_flag("-v,--verbose", opt.verbosity, "increase diagnostic output (-v, -vv)");
  };

  CLI::App* transform = app.add_subcommand("transform", "run a transformation over a source graph");
  transform->add_option("--source", opt.source_path, "source graph document")->required();
  transform->add_option("--rules", opt.rules_path, "transformation file (.gretl)")->required();
  transform->add_option("--out", opt.out_path, "target graph document to write")->required();
  transform->add_option("--dot", opt.dot_path, "also write a DOT rendering of the target");
  transform->add_option("--trace", opt.trace_path, "also write the archetype/image trace maps");
  add_verbosity(transform);

  CLI::App* validate = app.add_subcommand("validate", "check a graph document against its schema");
  validate->add_option("--source", opt.source_path, "graph document")->required();
  add_verbosity(validate);

  CLI::App* query = app.add_subcommand("query", "evaluate a query against a source graph");
  query->add_option("--source", opt.source_path, "source graph document")->required();
  query->add_option("query", opt.query_text, "query text")->required();
  add_verbosity(query);

  CLI::App* cases = app.add_subcommand("case", "run the bundled extraction cases");
  add_verbosity(cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(transform)) return cmd_transform(opt);
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(query)) return cmd_query(opt);
    return cmd_case(opt);
  } catch (const gretl::GretlError& e) {
    std::cerr << e.error_line() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ERROR IoError - " << e.what() << "\n";
    return 1;
  }
}
