#include "saddleconfig/saddleconfig.h"

#include <cstdlib>
#include <cstring>

#include "../core/gallery.hpp"
#include "../core/report.hpp"
#include "../core/svg.hpp"

using namespace saddle;

struct sc_config {
  Configuration impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sc_status status_of(Err code) {
  switch (code) {
    case Err::Io: return SC_ERR_IO;
    case Err::UnknownExample: return SC_ERR_USAGE;
    case Err::SchemaViolation: return SC_ERR_SCHEMA;
    case Err::NotRigid: return SC_ERR_NOT_RIGID;
    case Err::PhaseNotBalanced: return SC_ERR_PHASE_NOT_BALANCED;
    case Err::NewtonDivergence: return SC_ERR_NEWTON_DIVERGENCE;
    case Err::PreconditionViolated:
    case Err::LeftEdgeLemmaFailure:
    case Err::NotLineArrangement: return SC_ERR_PRECONDITION;
    default: return SC_ERR_INVARIANT;
  }
}

template <class Fn>
sc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SC_OK;
  } catch (const Error& e) {
    g_last_error = std::string(err_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SC_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

void sc_config_free(sc_config* config) { delete config; }

sc_status sc_config_load(const char* path, sc_config** out) {
  if (!path || !out) return SC_ERR_USAGE;
  return guarded([&] { *out = new sc_config{load_config(path)}; });
}

sc_status sc_config_from_json(const char* json_text, sc_config** out) {
  if (!json_text || !out) return SC_ERR_USAGE;
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Err::SchemaViolation, std::string("malformed JSON: ") + e.what());
    }
    *out = new sc_config{config_from_json(doc)};
  });
}

sc_status sc_config_save(const sc_config* config, const char* path) {
  if (!config || !path) return SC_ERR_USAGE;
  return guarded([&] { save_config(config->impl, path); });
}

sc_status sc_config_to_json(const sc_config* config, char** json_out) {
  if (!config || !json_out) return SC_ERR_USAGE;
  return guarded([&] { *json_out = dup_string(config_to_json(config->impl).dump(2)); });
}

sc_status sc_validate_file(const char* path, char** report_out) {
  if (!path || !report_out) return SC_ERR_USAGE;
  *report_out = nullptr;
  return guarded([&] {
    Configuration config = load_config(path);
    nlohmann::json report = validate_report(config);
    *report_out = dup_string(report.dump(2));
    if (!report["valid"].get<bool>())
      throw Error(Err::EulerViolation, "configuration violates graph invariants");
  });
}

sc_status sc_analyze(const sc_config* config, uint64_t seed, int with_certificate,
                     char** report_out) {
  if (!config || !report_out) return SC_ERR_USAGE;
  return guarded([&] {
    AnalyzeOptions options;
    options.seed = seed;
    options.with_certificate = with_certificate != 0;
    *report_out = dup_string(analyze(config->impl, options).dump(2));
  });
}

sc_status sc_phases(const sc_config* config, uint64_t seed, char** report_out) {
  if (!config || !report_out) return SC_ERR_USAGE;
  return guarded([&] { *report_out = dup_string(phases_report(config->impl, seed).dump(2)); });
}

sc_status sc_embed(const sc_config* config, const double* probes, int probe_count,
                   char** report_out) {
  if (!config || !report_out) return SC_ERR_USAGE;
  return guarded([&] {
    std::vector<double> eps(probes, probes + (probes ? probe_count : 0));
    EmbeddednessVerdict verdict = classify(config->impl, eps);
    *report_out = dup_string(verdict_to_json(verdict, config->impl.graph).dump(2));
  });
}

sc_status sc_render_svg(const sc_config* config, double eps, char** svg_out) {
  if (!config || !svg_out) return SC_ERR_USAGE;
  return guarded([&] { *svg_out = dup_string(render_svg(config->impl, eps)); });
}

sc_status sc_example(const char* name, int k, char** config_json_out) {
  if (!name || !config_json_out) return SC_ERR_USAGE;
  return guarded([&] {
    Configuration config = gallery_config(name, k);
    *config_json_out = dup_string(config_to_json(config).dump(2));
  });
}

sc_status sc_example_list(char** names_json_out) {
  if (!names_json_out) return SC_ERR_USAGE;
  return guarded([&] {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& entry : gallery_entries())
      list.push_back({{"name", entry.name},
                      {"summary", entry.summary},
                      {"parametrized", entry.parametrized}});
    *names_json_out = dup_string(list.dump(2));
  });
}

}  // extern "C"
