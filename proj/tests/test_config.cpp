#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <limits>

#include "core/config.hpp"
#include "core/gallery.hpp"

using namespace saddle;
using nlohmann::json;

namespace {

bool config_equal(const Configuration& a, const Configuration& b) {
  const auto& ga = a.graph;
  const auto& gb = b.graph;
  if (ga.prs.iota() != gb.prs.iota() || ga.prs.sigma() != gb.prs.sigma()) return false;
  if (ga.positions != gb.positions) return false;
  for (int h = 0; h < ga.prs.size(); ++h) {
    if (ga.theta[h] != gb.theta[h]) return false;
    if (a.upsilon[h] != b.upsilon[h] || a.mu[h] != b.mu[h]) return false;
  }
  for (int k = 0; k < a.phase.edge_count(); ++k)
    if (a.phase.by_edge(k) != b.phase.by_edge(k)) return false;
  return a.xi.c == b.xi.c;
}

}  // namespace

TEST_CASE("save then load is the identity on the gallery corpus") {
  for (const auto& entry : gallery_entries()) {
    CAPTURE(entry.name);
    Configuration config = gallery_config(entry.name);
    Configuration back = config_from_json(config_to_json(config));
    CHECK(config_equal(config, back));
  }
}

TEST_CASE("file round trip") {
  Configuration config = gallery_config("gyroid3");
  std::string path = "roundtrip_tmp.json";
  save_config(config, path);
  Configuration back = load_config(path);
  CHECK(config_equal(config, back));
  std::remove(path.c_str());
}

TEST_CASE("tree1 gallery file carries phase zero on the closed edge") {
  json doc = config_to_json(gallery_config("tree1"));
  REQUIRE(doc.contains("phase"));
  CHECK(doc["phase"].size() == 1);
  CHECK(doc["phase"].begin().value().get<double>() == 0.0);
}

TEST_CASE("negative upsilon rejected") {
  json doc = config_to_json(gallery_config("tree1"));
  doc["upsilon"] = {{"0", -1.0}};
  try {
    config_from_json(doc);
    FAIL("expected UpsilonNotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == Err::UpsilonNotPositive);
  }
}

TEST_CASE("non-antisymmetric phase rejected") {
  json doc = config_to_json(gallery_config("tree1"));
  doc["phase"] = {{"0", 0.3}, {"1", 0.3}};
  try {
    config_from_json(doc);
    FAIL("expected PhaseNotAntisymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Err::PhaseNotAntisymmetric);
  }
}

TEST_CASE("antisymmetric pair accepted, including pi = -pi") {
  json doc = config_to_json(gallery_config("tree1"));
  doc["phase"] = {{"0", 0.3}, {"1", -0.3}};
  Configuration config = config_from_json(doc);
  CHECK(config.phase.at(config.graph.prs, 0) == doctest::Approx(0.3));
  doc["phase"] = {{"0", kPi}, {"1", kPi}};
  CHECK_NOTHROW(config_from_json(doc));
}

TEST_CASE("schema violations") {
  json doc = config_to_json(gallery_config("tree1"));
  SUBCASE("missing iota") {
    doc.erase("iota");
    CHECK_THROWS_AS(config_from_json(doc), Error);
  }
  SUBCASE("vertex_of inconsistent with sigma orbits") {
    doc["vertex_of"][0] = doc["vertex_of"][1].get<int>() == 0 ? 1 : 0;
    doc["vertex_of"][2] = 1;  // half-edge 2 shares v0's orbit
    CHECK_THROWS_AS(config_from_json(doc), Error);
  }
  SUBCASE("missing ray angle") {
    doc["ray_angles"].erase("2");
    CHECK_THROWS_AS(config_from_json(doc), Error);
  }
  SUBCASE("non-finite angle") {
    doc["ray_angles"]["2"] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(config_from_json(doc), Error);
  }
}

TEST_CASE("malformed file raises Io or SchemaViolation") {
  CHECK_THROWS_AS(load_config("does_not_exist.json"), Error);
  std::string path = "malformed_tmp.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  try {
    load_config(path);
    FAIL("expected SchemaViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SchemaViolation);
  }
  std::remove(path.c_str());
}

TEST_CASE("xi round trips and stays antisymmetric") {
  Configuration config = gallery_config("misc1");
  CHECK(config.xi.norm() > 0);
  Configuration back = config_from_json(config_to_json(config));
  CHECK(back.xi.c == config.xi.c);
  const auto& g = back.graph;
  for (int rep : g.prs.edge_reps())
    CHECK(back.xi.x_at(g, rep) == -back.xi.x_at(g, g.prs.partner(rep)));
}
