// SPDX-License-Identifier: Apache-2.0
//
// Regenerates the fixtures directory: source documents, hand-traced golden
// targets, manifests and the bundled transformation text.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gretl/cases.hpp"
#include "gretl/io.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(dir + "/" + name, std::ios::binary | std::ios::trunc);
    out << content;
    std::cout << dir << "/" << name << "\n";
  };

  for (const gretl::Fixture& f : gretl::build_fixtures()) {
    write(f.manifest.source_file, gretl::save_graph_to_string(*f.graph));
    gretl::LoadedGraph golden = gretl::golden_target(f.manifest);
    write(f.manifest.golden_file, gretl::save_graph_to_string(*golden.graph));
    write(f.manifest.id + ".manifest.json", gretl::manifest_to_json(f.manifest));
    std::cerr << f.manifest.id << ": " << f.graph->vertex_count() << " vertices, "
              << f.graph->edge_count() << " edges\n";
  }
  gretl::Fixture negative = gretl::build_negative_two_state_classes();
  write(negative.manifest.source_file, gretl::save_graph_to_string(*negative.graph));
  write("ExtractStateMachines.gretl", gretl::reference_transformation());
  return 0;
}
