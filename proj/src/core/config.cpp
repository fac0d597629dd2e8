#include "config.hpp"

#include <fstream>

namespace saddle {

using nlohmann::json;

namespace {

int parse_half_edge_key(const std::string& key, int n) {
  int h;
  try {
    size_t pos = 0;
    h = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw Error(Err::SchemaViolation, "half-edge key '" + key + "' is not an integer");
  }
  if (h < 0 || h >= n)
    throw Error(Err::SchemaViolation, "half-edge key " + key + " out of range");
  return h;
}

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(Err::SchemaViolation, std::string(what) + " is not finite");
  return v;
}

std::vector<int> int_array(const json& doc, const char* key, size_t n) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n)
    throw Error(Err::SchemaViolation, std::string("'") + key + "' must be an array of length " +
                                          std::to_string(n));
  std::vector<int> out;
  for (const auto& x : doc[key]) {
    if (!x.is_number_integer())
      throw Error(Err::SchemaViolation, std::string("'") + key + "' entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Configuration config_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(Err::SchemaViolation, "configuration must be a JSON object");
  if (!doc.contains("half_edges") || !doc["half_edges"].is_number_integer())
    throw Error(Err::SchemaViolation, "'half_edges' (integer) is required");
  const int n = doc["half_edges"].get<int>();
  if (n <= 0) throw Error(Err::SchemaViolation, "'half_edges' must be positive");

  auto prs = PseudoRotationSystem::make(int_array(doc, "iota", n), int_array(doc, "sigma", n));

  // vertex ids and positions
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(Err::SchemaViolation, "'vertices' array is required");
  std::map<int, Complex> pos_by_id;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("position") ||
        !v["position"].is_array() || v["position"].size() != 2)
      throw Error(Err::SchemaViolation, "each vertex needs {id, position:[re,im]}");
    int id = v["id"].get<int>();
    if (pos_by_id.count(id))
      throw Error(Err::SchemaViolation, "duplicate vertex id " + std::to_string(id));
    pos_by_id[id] = Complex(require_finite(v["position"][0].get<double>(), "position"),
                            require_finite(v["position"][1].get<double>(), "position"));
  }
  auto vertex_of = int_array(doc, "vertex_of", n);
  // vertex_of must be constant on the sigma orbits and cover the id list
  std::map<int, int> id_to_orbit;
  for (int h = 0; h < n; ++h) {
    int id = vertex_of[h];
    if (!pos_by_id.count(id))
      throw Error(Err::SchemaViolation, "vertex_of references unknown id " + std::to_string(id));
    auto [it, inserted] = id_to_orbit.emplace(id, prs.vertex_of(h));
    if (!inserted && it->second != prs.vertex_of(h))
      throw Error(Err::SchemaViolation, "vertex_of is inconsistent with the sigma orbits");
  }
  if (id_to_orbit.size() != pos_by_id.size() ||
      static_cast<int>(id_to_orbit.size()) != prs.vertex_count())
    throw Error(Err::SchemaViolation, "vertex list does not match the sigma orbits");
  std::vector<Complex> positions(prs.vertex_count());
  for (auto& [id, orbit] : id_to_orbit) positions[orbit] = pos_by_id[id];

  std::map<int, double> ray_angles;
  if (doc.contains("ray_angles")) {
    if (!doc["ray_angles"].is_object())
      throw Error(Err::SchemaViolation, "'ray_angles' must be an object");
    for (auto& [key, value] : doc["ray_angles"].items())
      ray_angles[parse_half_edge_key(key, n)] = require_finite(value.get<double>(), "ray angle");
  }

  Configuration config;
  config.graph = build_graph(prs, positions, ray_angles);

  // phase: one half-edge per closed edge suffices; both given must agree
  config.phase = PhaseFunction(prs.closed_edge_count());
  if (doc.contains("phase")) {
    if (!doc["phase"].is_object()) throw Error(Err::SchemaViolation, "'phase' must be an object");
    std::map<int, double> given;
    for (auto& [key, value] : doc["phase"].items()) {
      int h = parse_half_edge_key(key, n);
      if (prs.is_ray(h))
        throw Error(Err::SchemaViolation, "phase given for ray half-edge " + std::to_string(h));
      given[h] = require_finite(value.get<double>(), "phase");
    }
    for (auto& [h, value] : given) {
      int p = prs.partner(h);
      if (given.count(p) && h < p) {
        double mismatch = std::abs(wrap_pi(given[h] + given[p]));
        if (mismatch > kGeomTol)
          throw Error(Err::PhaseNotAntisymmetric,
                      "phase values for half-edges " + std::to_string(h) + " and " +
                          std::to_string(p) + " do not satisfy phi(-h) = -phi(h) mod 2pi");
      }
      if (prs.rep_sign(h) > 0 || !given.count(p))
        config.phase.set(prs, h, wrap_pi(value));
    }
    // normalize representatives to (-pi, pi]
    for (int k = 0; k < prs.closed_edge_count(); ++k)
      config.phase.by_edge(k) = wrap_pi(config.phase.by_edge(k));
  }

  config.upsilon.assign(n, 1.0);
  if (doc.contains("upsilon")) {
    if (!doc["upsilon"].is_object()) throw Error(Err::SchemaViolation, "'upsilon' must be an object");
    for (auto& [key, value] : doc["upsilon"].items())
      config.upsilon[parse_half_edge_key(key, n)] = require_finite(value.get<double>(), "upsilon");
  }
  for (int h = 0; h < n; ++h)
    if (config.upsilon[h] <= 0)
      throw Error(Err::UpsilonNotPositive,
                  "upsilon must be strictly positive (half-edge " + std::to_string(h) + ")");

  config.mu.assign(n, Complex{0, 0});
  if (doc.contains("mu")) {
    if (!doc["mu"].is_object()) throw Error(Err::SchemaViolation, "'mu' must be an object");
    for (auto& [key, value] : doc["mu"].items()) {
      if (!value.is_array() || value.size() != 2)
        throw Error(Err::SchemaViolation, "'mu' values must be [re, im]");
      config.mu[parse_half_edge_key(key, n)] =
          Complex(require_finite(value[0].get<double>(), "mu"),
                  require_finite(value[1].get<double>(), "mu"));
    }
  }

  config.xi = DeformationVector::zero(config.graph);
  if (doc.contains("xi")) {
    const auto& xi = doc["xi"];
    if (!xi.is_object()) throw Error(Err::SchemaViolation, "'xi' must be an object");
    if (xi.contains("x")) {
      std::map<int, Complex> given;
      for (auto& [key, value] : xi["x"].items()) {
        if (!value.is_array() || value.size() != 2)
          throw Error(Err::SchemaViolation, "'xi.x' values must be [re, im]");
        int h = parse_half_edge_key(key, n);
        if (prs.is_ray(h))
          throw Error(Err::SchemaViolation, "'xi.x' given for ray half-edge " + std::to_string(h));
        given[h] = Complex(require_finite(value[0].get<double>(), "xi.x"),
                           require_finite(value[1].get<double>(), "xi.x"));
      }
      for (auto& [h, value] : given) {
        int p = prs.partner(h);
        if (given.count(p) && std::abs(given[h] + given[p]) > kGeomTol)
          throw Error(Err::SchemaViolation, "'xi.x' must be antisymmetric");
        if (prs.rep_sign(h) > 0 || !given.count(p)) config.xi.set_x(config.graph, h, value);
      }
    }
    if (xi.contains("theta"))
      for (auto& [key, value] : xi["theta"].items()) {
        int r = parse_half_edge_key(key, n);
        if (!prs.is_ray(r))
          throw Error(Err::SchemaViolation, "'xi.theta' key must be a ray half-edge");
        config.xi.set_theta(config.graph, r, require_finite(value.get<double>(), "xi.theta"));
      }
  }
  return config;
}

json config_to_json(const Configuration& config) {
  const auto& g = config.graph;
  const int n = g.prs.size();
  json doc;
  doc["half_edges"] = n;
  doc["iota"] = g.prs.iota();
  doc["sigma"] = g.prs.sigma();
  json verts = json::array();
  for (int v = 0; v < g.prs.vertex_count(); ++v)
    verts.push_back({{"id", v}, {"position", {g.positions[v].real(), g.positions[v].imag()}}});
  doc["vertices"] = verts;
  std::vector<int> vertex_of(n);
  for (int h = 0; h < n; ++h) vertex_of[h] = g.prs.vertex_of(h);
  doc["vertex_of"] = vertex_of;
  json rays = json::object();
  for (int r : g.prs.rays()) rays[std::to_string(r)] = g.theta[r];
  doc["ray_angles"] = rays;
  json phase = json::object();
  for (int rep : g.prs.edge_reps()) phase[std::to_string(rep)] = config.phase.at(g.prs, rep);
  doc["phase"] = phase;
  json upsilon = json::object(), mu = json::object();
  for (int h = 0; h < n; ++h) {
    if (config.upsilon[h] != 1.0) upsilon[std::to_string(h)] = config.upsilon[h];
    if (config.mu[h] != Complex{0, 0})
      mu[std::to_string(h)] = {config.mu[h].real(), config.mu[h].imag()};
  }
  if (!upsilon.empty()) doc["upsilon"] = upsilon;
  if (!mu.empty()) doc["mu"] = mu;
  if (config.xi.c.size() > 0 && config.xi.norm() != 0) {
    json x = json::object(), theta = json::object();
    for (int rep : g.prs.edge_reps()) {
      Complex v = config.xi.x_at(g, rep);
      if (v != Complex{0, 0}) x[std::to_string(rep)] = {v.real(), v.imag()};
    }
    for (int r : g.prs.rays()) {
      double v = config.xi.theta_at(g, r);
      if (v != 0) theta[std::to_string(r)] = v;
    }
    doc["xi"] = json::object();
    if (!x.empty()) doc["xi"]["x"] = x;
    if (!theta.empty()) doc["xi"]["theta"] = theta;
  }
  return doc;
}

Configuration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::Io, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Err::SchemaViolation, std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(doc);
}

void save_config(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::Io, "cannot write " + path);
  out << config_to_json(config).dump(2) << "\n";
}

}  // namespace saddle
