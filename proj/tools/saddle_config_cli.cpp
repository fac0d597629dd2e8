// saddle-config: validate, analyze and render saddle-tower gluing
// configurations. Talks to the core exclusively through the C API.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "saddleconfig/saddleconfig.h"

namespace {

using nlohmann::json;

// exit codes: 0 success, 1 I/O or usage, 2 mathematical precondition failure
int exit_code_of(sc_status status) {
  switch (status) {
    case SC_OK: return 0;
    case SC_ERR_IO:
    case SC_ERR_USAGE:
    case SC_ERR_SCHEMA: return 1;
    default: return 2;
  }
}

int fail(sc_status status) {
  std::cerr << "error: " << sc_last_error() << "\n";
  return exit_code_of(status);
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { sc_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedConfig {
  sc_config* ptr = nullptr;
  ~OwnedConfig() { sc_config_free(ptr); }
};

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("SADDLE_CONFIG_SEED")) return std::strtoull(env, nullptr, 10);
  return seed;
}

void print_graph_summary(const json& g) {
  std::cout << "graph: |V|=" << g["vertices"] << " |E|=" << g["edges"]
            << " |R|=" << g["rays"] << " |F|=" << g["faces"]
            << " euler=" << g["euler"] << (g["euler_ok"].get<bool>() ? " (ok)" : " (VIOLATED)")
            << "\n";
  std::cout << "  orientable: " << (g["orientable"].get<bool>() ? "yes" : "no")
            << "  tree: " << (g["is_tree"].get<bool>() ? "yes" : "no")
            << "  line arrangement: " << (g["line_arrangement"].get<bool>() ? "yes" : "no")
            << "\n";
}

int cmd_validate(const std::string& path, bool as_json) {
  OwnedString report;
  sc_status status = sc_validate_file(path.c_str(), &report.ptr);
  if (as_json) {
    if (report.ptr)
      std::cout << report.str() << "\n";
    else
      std::cout << json{{"valid", false}, {"error", sc_last_error()}}.dump(2) << "\n";
  } else if (report.ptr) {
    json doc = json::parse(report.str());
    print_graph_summary(doc["graph"]);
    std::cout << (doc["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
    for (const auto& f : doc["findings"]) std::cout << "  - " << f.get<std::string>() << "\n";
  }
  if (status != SC_OK && !report.ptr) return fail(status);
  return exit_code_of(status);
}

int cmd_analyze(const std::string& path, bool as_json, bool certify, std::uint64_t seed) {
  OwnedConfig config;
  if (sc_status s = sc_config_load(path.c_str(), &config.ptr); s != SC_OK) return fail(s);
  OwnedString report;
  if (sc_status s = sc_analyze(config.ptr, seed, certify ? 1 : 0, &report.ptr); s != SC_OK)
    return fail(s);
  if (as_json) {
    std::cout << report.str() << "\n";
    return 0;
  }
  json doc = json::parse(report.str());
  print_graph_summary(doc["graph"]);
  const auto& hor = doc["horizontal"];
  std::cout << "horizontal: balanced=" << (hor["balanced"].get<bool>() ? "yes" : "no")
            << " rigid=" << (hor["rigid"].get<bool>() ? "yes" : "no")
            << " dim D=" << hor["deformation_dim"] << " (|R|-2=" << hor["expected_rigid_dim"]
            << ")\n";
  if (hor.contains("certificate")) {
    const auto& cert = hor["certificate"];
    if (cert["success"].get<bool>())
      std::cout << "  certificate: issued (min dets " << cert["min_vertex_det"] << ", "
                << cert["min_face_det"] << ")\n";
    else
      std::cout << "  certificate: " << cert["failure"].get<std::string>() << " — "
                << cert["reason"].get<std::string>() << "\n";
  }
  const auto& ver = doc["vertical"];
  if (ver.contains("error")) {
    std::cout << "vertical: skipped (" << ver["error"].get<std::string>() << ")\n";
  } else {
    std::cout << "vertical: balanced=" << (ver["balanced"].get<bool>() ? "yes" : "no")
              << " rigid=" << (ver["rigid"].get<bool>() ? "yes" : "no")
              << " rank=" << ver["rank"] << " kernel=" << ver["kernel_dim"] << "\n";
  }
  if (doc.contains("embeddedness")) {
    const auto& emb = doc["embeddedness"];
    if (emb.contains("error"))
      std::cout << "embeddedness: skipped (" << emb["error"].get<std::string>() << ")\n";
    else
      std::cout << "embeddedness: " << emb["outcome"].get<std::string>() << " at tier "
                << emb["tier"].get<std::string>()
                << (emb["heuristic"].get<bool>() ? " (heuristic)" : "") << "\n";
  }
  return 0;
}

int cmd_phases(const std::string& path, bool as_json, std::uint64_t seed) {
  OwnedConfig config;
  if (sc_status s = sc_config_load(path.c_str(), &config.ptr); s != SC_OK) return fail(s);
  OwnedString report;
  if (sc_status s = sc_phases(config.ptr, seed, &report.ptr); s != SC_OK) return fail(s);
  if (as_json) {
    std::cout << report.str() << "\n";
    return 0;
  }
  json doc = json::parse(report.str());
  std::cout << doc["count"] << " balanced phase function(s)"
            << (doc["is_tree"].get<bool>() ? " (tree: trivial per parallelism class)" : "")
            << "\n";
  for (const auto& item : doc["solutions"]) {
    std::cout << "  " << (item["trivial"].get<bool>() ? "[trivial]   " : "[nontrivial]")
              << " vertical " << (item["vertically_rigid"].get<bool>() ? "rigid" : "not rigid")
              << "  phi = {";
    bool first = true;
    for (const auto& [key, value] : item["phase"].items()) {
      if (!first) std::cout << ", ";
      std::cout << key << ": " << value;
      first = false;
    }
    std::cout << "}\n";
  }
  return 0;
}

int cmd_embed(const std::string& path, bool as_json, const std::vector<double>& probes) {
  OwnedConfig config;
  if (sc_status s = sc_config_load(path.c_str(), &config.ptr); s != SC_OK) return fail(s);
  OwnedString report;
  sc_status s = sc_embed(config.ptr, probes.empty() ? nullptr : probes.data(),
                         static_cast<int>(probes.size()), &report.ptr);
  if (s != SC_OK) return fail(s);
  if (as_json) {
    std::cout << report.str() << "\n";
    return 0;
  }
  json doc = json::parse(report.str());
  std::cout << doc["outcome"].get<std::string>() << " (tier " << doc["tier"].get<std::string>()
            << (doc["heuristic"].get<bool>() ? ", heuristic" : "") << ")\n";
  for (const auto& pair : doc["pairs"])
    std::cout << "  rays " << pair["ray_low"] << " / " << pair["ray_high"] << ": "
              << pair["status"].get<std::string>() << " at " << pair["tier"].get<std::string>()
              << " (separation " << pair["separation"] << ")\n";
  return 0;
}

int cmd_render(const std::string& path, double eps, const std::string& out_path) {
  OwnedConfig config;
  if (sc_status s = sc_config_load(path.c_str(), &config.ptr); s != SC_OK) return fail(s);
  OwnedString svg;
  if (sc_status s = sc_render_svg(config.ptr, eps, &svg.ptr); s != SC_OK) return fail(s);
  if (out_path.empty() || out_path == "-") {
    std::cout << svg.str();
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  out << svg.str();
  return 0;
}

int cmd_example(const std::string& name, int k, bool list, const std::string& out_path) {
  if (list) {
    OwnedString names;
    if (sc_status s = sc_example_list(&names.ptr); s != SC_OK) return fail(s);
    json doc = json::parse(names.str());
    for (const auto& entry : doc)
      std::cout << entry["name"].get<std::string>()
                << (entry["parametrized"].get<bool>() ? " (accepts --k)" : "") << "  — "
                << entry["summary"].get<std::string>() << "\n";
    return 0;
  }
  OwnedString config_json;
  if (sc_status s = sc_example(name.c_str(), k, &config_json.ptr); s != SC_OK) return fail(s);
  if (out_path.empty() || out_path == "-") {
    std::cout << config_json.str() << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  out << config_json.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saddle-config — analysis of saddle-tower gluing configurations"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global flags after a subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for deterministic pseudo-randomness");

  std::string path;
  auto* validate = app.add_subcommand("validate", "check a configuration file");
  validate->add_option("path", path, "configuration file")->required();

  bool certify = false;
  auto* analyze = app.add_subcommand("analyze", "full balance/rigidity report");
  analyze->add_option("path", path, "configuration file")->required();
  analyze->add_flag("--certify", certify, "also run the constructive rigidity certificate");

  auto* phases = app.add_subcommand("phases", "balanced phase functions");
  phases->add_option("path", path, "configuration file")->required();

  std::vector<double> probes;
  auto* embed = app.add_subcommand("embed", "embeddedness classification");
  embed->add_option("path", path, "configuration file")->required();
  embed->add_option("--eps", probes, "probe epsilon(s), default 0.08 0.04 0.02");

  double eps = 0.0;
  std::string out_path;
  auto* render = app.add_subcommand("render", "SVG figure of the (deformed) graph");
  render->add_option("path", path, "configuration file")->required();
  render->add_option("--eps", eps, "deformation parameter");
  render->add_option("--out", out_path, "output file (default stdout)");

  std::string name;
  int k = 0;
  bool list = false;
  auto* example = app.add_subcommand("example", "emit a built-in example configuration");
  example->add_option("name", name, "example name");
  example->add_option("--k", k, "parameter for parametrized examples");
  example->add_flag("--list", list, "list example names");
  example->add_option("--out", out_path, "output file (default stdout)");

  for (auto* sub : app.get_subcommands(/*filter=*/[](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  std::uint64_t final_seed = effective_seed(seed);

  try {
    if (validate->parsed()) return cmd_validate(path, as_json);
    if (analyze->parsed()) return cmd_analyze(path, as_json, certify, final_seed);
    if (phases->parsed()) return cmd_phases(path, as_json, final_seed);
    if (embed->parsed()) return cmd_embed(path, as_json, probes);
    if (render->parsed()) return cmd_render(path, eps, out_path);
    if (example->parsed()) {
      if (!list && name.empty()) {
        std::cerr << "error: example name required (or --list)\n";
        return 1;
      }
      return cmd_example(name, k, list, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
