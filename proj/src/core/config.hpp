#pragma once

#include <json.hpp>

#include "deform.hpp"

namespace saddle {

// A graph with a prescribed antisymmetric phase function, tower parameters
// (upsilon, mu) per half-edge, and a prescribed deformation xi.
struct Configuration {
  GeometricGraph graph;
  PhaseFunction phase;          // values normalized to (-pi, pi]
  std::vector<double> upsilon;  // per half-edge, default 1
  std::vector<Complex> mu;      // per half-edge, default 0
  DeformationVector xi;         // default zero

  double k_coefficient_base(int h) const {  // Upsilon_h * Upsilon_{-h}
    return upsilon[h] * upsilon[graph.prs.partner(h)];
  }
};

Configuration config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const Configuration& config);

Configuration load_config(const std::string& path);
void save_config(const Configuration& config, const std::string& path);

}  // namespace saddle
