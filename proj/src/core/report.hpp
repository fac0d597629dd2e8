#pragma once

#include <cstdint>

#include "embed.hpp"

namespace saddle {

struct AnalyzeOptions {
  bool with_certificate = false;
  bool with_embeddedness = true;
  std::uint64_t seed = 0;
  std::vector<double> eps_probes;  // empty = defaults
};

// Aggregated report: graph summary, horizontal and vertical analysis, and the
// embeddedness verdict when it is computable. Deterministic for fixed input
// and seed.
nlohmann::json analyze(const Configuration& config, const AnalyzeOptions& options = {});

// Validation-only report used by the `validate` command: schema and invariant
// findings plus orientability.
nlohmann::json validate_report(const Configuration& config);

nlohmann::json verdict_to_json(const EmbeddednessVerdict& verdict, const GeometricGraph& g);
nlohmann::json phases_report(const Configuration& config, std::uint64_t seed);

}  // namespace saddle
