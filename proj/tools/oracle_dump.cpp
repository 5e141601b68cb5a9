// Writes brute-force oracle values for every fixture graph to versioned JSON
// files, or with --check recomputes them and compares against the files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "eulermin/graph.hpp"
#include "eulermin/report.hpp"
#include "eulermin/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace eulermin;

namespace {

constexpr int kOracleVersion = 1;

json oracle_record(const std::string& name, const Graph& g) {
  const int max_degree = g.edge_count() <= 15 ? 5 : 4;
  json out;
  out["schema"] = "eulermin.oracle";
  out["schema_version"] = kOracleVersion;
  out["graph"] = name;
  out["edges"] = g.edge_count();
  out["max_degree"] = max_degree;

  json counts = json::object();
  for (auto [degree, count] : oracle_generator_counts(g, max_degree)) counts[std::to_string(degree)] = count;
  out["generator_counts"] = counts;

  int even = 0;
  int odd = 0;
  std::map<std::string, int> tags;
  json even_sets = json::array();
  for (EdgeSet c : oracle_eulerian_sets(g)) {
    if (c.size() % 2 == 1) {
      ++odd;
      continue;
    }
    ++even;
    if (!c.empty()) ++tags[to_string(oracle_classify_eulerian(g, c).tag)];
    if (g.edge_count() <= 13) even_sets.push_back(format_edge_set(g, c));
  }
  out["eulerian_counts"] = {{"even", even}, {"odd", odd}};
  out["even_tags"] = tags;
  if (g.edge_count() <= 13) out["eulerian_even"] = even_sets;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeze brute-force oracle values for the fixture graphs"};
  std::string fixtures;
  std::string expected;
  bool check = false;
  app.add_option("fixtures", fixtures, "directory of *.g fixture graphs")->required();
  app.add_option("expected", expected, "directory for the frozen *.json files")->required();
  app.add_flag("--check", check, "compare instead of writing");
  CLI11_PARSE(app, argc, argv);

  std::vector<fs::path> graphs;
  for (const auto& entry : fs::directory_iterator(fixtures)) {
    if (entry.path().extension() == ".g") graphs.push_back(entry.path());
  }
  std::sort(graphs.begin(), graphs.end());
  fs::create_directories(expected);

  int mismatches = 0;
  for (const auto& path : graphs) {
    const std::string name = path.stem().string();
    const json record = oracle_record(name, load_graph(path.string()));
    const fs::path target = fs::path(expected) / (name + ".json");
    if (!check) {
      std::ofstream(target) << record.dump(2) << "\n";
      std::cout << "wrote " << target.string() << "\n";
      continue;
    }
    std::ifstream in(target);
    if (!in) {
      std::cout << "MISSING " << target.string() << "\n";
      ++mismatches;
      continue;
    }
    const json frozen = json::parse(in);
    if (frozen != record) {
      std::cout << "MISMATCH " << name << "\n";
      ++mismatches;
    } else {
      std::cout << "ok " << name << "\n";
    }
  }
  return mismatches == 0 ? 0 : 1;
}
