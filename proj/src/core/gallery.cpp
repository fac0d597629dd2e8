#include "gallery.hpp"

#include <algorithm>
#include <cmath>

namespace saddle {

int GraphBuilder::add_vertex(Complex position) {
  positions_.push_back(position);
  return static_cast<int>(positions_.size()) - 1;
}

std::pair<int, int> GraphBuilder::add_edge(int u, int v, int tiebreak_u, int tiebreak_v) {
  Complex d = positions_[v] - positions_[u];
  int h1 = static_cast<int>(halves_.size());
  halves_.push_back({u, wrap_two_pi(std::arg(d)), tiebreak_u, h1 + 1});
  halves_.push_back({v, wrap_two_pi(std::arg(-d)), tiebreak_v, h1});
  ray_angles_.push_back(std::nan(""));
  ray_angles_.push_back(std::nan(""));
  return {h1, h1 + 1};
}

int GraphBuilder::add_ray(int v, double angle, int tiebreak) {
  int h = static_cast<int>(halves_.size());
  halves_.push_back({v, wrap_two_pi(angle), tiebreak, h});
  ray_angles_.push_back(wrap_two_pi(angle));
  return h;
}

GeometricGraph GraphBuilder::build() const {
  const int n = static_cast<int>(halves_.size());
  std::vector<int> iota(n), sigma(n);
  for (int h = 0; h < n; ++h) iota[h] = halves_[h].partner;
  for (int v = 0; v < static_cast<int>(positions_.size()); ++v) {
    std::vector<int> at;
    for (int h = 0; h < n; ++h)
      if (halves_[h].vertex == v) at.push_back(h);
    std::sort(at.begin(), at.end(), [&](int a, int b) {
      if (std::abs(halves_[a].angle - halves_[b].angle) > kGeomTol)
        return halves_[a].angle < halves_[b].angle;
      if (halves_[a].tiebreak != halves_[b].tiebreak)
        return halves_[a].tiebreak < halves_[b].tiebreak;
      return a < b;
    });
    for (size_t i = 0; i < at.size(); ++i) sigma[at[i]] = at[(i + 1) % at.size()];
  }
  std::map<int, double> ray_angles;
  for (int h = 0; h < n; ++h)
    if (iota[h] == h) ray_angles[h] = ray_angles_[h];
  return build_graph(PseudoRotationSystem::make(iota, sigma), positions_, ray_angles);
}

namespace {

Configuration with_graph(GeometricGraph g) {
  Configuration config;
  config.phase = PhaseFunction(g.prs.closed_edge_count());
  config.upsilon.assign(g.prs.size(), 1.0);
  config.mu.assign(g.prs.size(), Complex{0, 0});
  config.xi = DeformationVector::zero(g);
  config.graph = std::move(g);
  return config;
}

Configuration make_tree1() {
  GraphBuilder b;
  int v0 = b.add_vertex({0, 0});
  int v1 = b.add_vertex({1, 0});
  b.add_edge(v0, v1);
  b.add_ray(v0, kPi / 2);
  b.add_ray(v0, kPi);
  b.add_ray(v0, 3 * kPi / 2);
  b.add_ray(v1, kPi / 2);
  b.add_ray(v1, 0);
  b.add_ray(v1, 3 * kPi / 2);
  return with_graph(b.build());
}

Configuration make_tree2() {
  GraphBuilder b;
  std::vector<int> vs;
  for (int i = 0; i < 4; ++i) vs.push_back(b.add_vertex({static_cast<double>(i), 0}));
  for (int i = 0; i < 3; ++i) b.add_edge(vs[i], vs[i + 1]);
  for (int v : vs) {
    b.add_ray(v, kPi / 2);
    b.add_ray(v, 3 * kPi / 2);
  }
  b.add_ray(vs[0], kPi);
  b.add_ray(vs[3], 0);
  return with_graph(b.build());
}

Configuration make_tree3() {
  // doubled unit segment with doubled rays; the nesting tiebreaks make the
  // two parallel edges bound a bigon face
  GraphBuilder b;
  int v0 = b.add_vertex({0, 0});
  int v1 = b.add_vertex({1, 0});
  b.add_edge(v0, v1, 1, 0);
  b.add_edge(v0, v1, 0, 1);
  for (int tb : {0, 1}) b.add_ray(v0, 2 * kPi / 3, tb);
  for (int tb : {0, 1}) b.add_ray(v0, 4 * kPi / 3, tb);
  for (int tb : {0, 1}) b.add_ray(v1, kPi / 3, tb);
  for (int tb : {0, 1}) b.add_ray(v1, 5 * kPi / 3, tb);
  return with_graph(b.build());
}

// Full arrangement of pairwise non-parallel lines given as (point, direction).
GeometricGraph arrangement(const std::vector<std::pair<Complex, double>>& lines) {
  GraphBuilder b;
  const int m = static_cast<int>(lines.size());
  std::vector<std::vector<std::pair<double, Complex>>> hits(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Complex e1 = std::polar(1.0, lines[i].second), e2 = std::polar(1.0, lines[j].second);
      double den = (std::conj(e1) * e2).imag();
      if (std::abs(den) < 1e-12) continue;
      Complex d = lines[j].first - lines[i].first;
      double t = (std::conj(d) * e2).imag() / den;
      Complex p = lines[i].first + t * e1;
      hits[i].push_back({t, p});
      double s = ((std::conj(p - lines[j].first)) * e2).real();
      hits[j].push_back({s, p});
    }
  for (int i = 0; i < m; ++i) {
    auto& h = hits[i];
    std::sort(h.begin(), h.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    h.erase(std::unique(h.begin(), h.end(),
                        [](const auto& a, const auto& b) { return b.first - a.first < kGeomTol; }),
            h.end());
  }
  // vertices created lazily, in line-then-parameter order, so ids are stable
  std::vector<int> vertex_ids;
  std::vector<Complex> vertex_pos;
  auto get_vertex = [&](Complex p) {
    for (size_t i = 0; i < vertex_pos.size(); ++i)
      if (std::abs(vertex_pos[i] - p) < kGeomTol) return vertex_ids[i];
    vertex_ids.push_back(b.add_vertex(p));
    vertex_pos.push_back(p);
    return vertex_ids.back();
  };
  for (int i = 0; i < m; ++i) {
    std::vector<int> vids;
    for (auto& [t, p] : hits[i]) vids.push_back(get_vertex(p));
    for (size_t k = 0; k + 1 < vids.size(); ++k) b.add_edge(vids[k], vids[k + 1]);
    b.add_ray(vids.front(), lines[i].second + kPi);
    b.add_ray(vids.back(), lines[i].second);
  }
  return b.build();
}

std::vector<std::pair<Complex, double>> triangle_lines() {
  Complex a{0, std::sqrt(3.0)}, bb{-1, 0}, c{1, 0};
  return {{bb, std::arg(a - bb)}, {bb, 0.0}, {c, std::arg(a - c)}};
}

Configuration make_gyroid3() {
  Configuration config = with_graph(arrangement(triangle_lines()));
  // nontrivial balanced phases: constant 2pi/3 along the central cycle
  const auto& g = config.graph;
  for (const auto& cyc : g.faces)
    if (cyc.size() == 3)
      for (int h : cyc) config.phase.set(g.prs, h, 2 * kPi / 3);
  return config;
}

Configuration make_gyroid4() {
  Configuration config = with_graph(arrangement({{{-1, -1}, 0.0},
                                                 {{-1, 1}, 0.0},
                                                 {{-1, -1}, kPi / 2},
                                                 {{1, -1}, kPi / 2}}));
  const auto& g = config.graph;
  for (const auto& cyc : g.faces)
    if (cyc.size() == 4)
      for (int h : cyc) config.phase.set(g.prs, h, kPi / 2);
  return config;
}

Configuration make_polygram(int k) {
  if (k < 5) throw Error(Err::UnknownExample, "polygram requires k >= 5");
  std::vector<std::pair<Complex, double>> lines;
  for (int j = 0; j < k; ++j) {
    double beta = kTwoPi * j / k;
    if (k % 2 == 0) beta += kPi * j / (static_cast<double>(k) * k);  // avoid parallel lines
    lines.push_back({std::polar(1.0, beta), wrap_two_pi(beta + kPi / 2)});
  }
  return with_graph(arrangement(lines));
}

Configuration make_misc1() {
  auto lines = triangle_lines();
  lines.push_back({Complex{0, std::sqrt(3.0)}, 0.0});  // through the apex, parallel to the base
  Configuration config = with_graph(arrangement(lines));
  // prescribed deformation: tilt pattern (1,-2,2,-1) on the apex rays ordered
  // by angle (0, 60, 120, 180 degrees); lies in D with x-dot = 0
  const auto& g = config.graph;
  int apex = -1;
  for (int v = 0; v < g.prs.vertex_count(); ++v)
    if (g.prs.degree(v) == 6) apex = v;
  std::vector<int> apex_rays;
  for (int h : g.prs.half_edges_at(apex))
    if (g.prs.is_ray(h)) apex_rays.push_back(h);
  std::sort(apex_rays.begin(), apex_rays.end(),
            [&](int a, int b) { return g.theta[a] < g.theta[b]; });
  const double coeff[4] = {1.0, -2.0, 2.0, -1.0};
  for (int i = 0; i < 4; ++i) config.xi.set_theta(g, apex_rays[i], 0.05 * coeff[i]);
  return config;
}

Configuration make_benzene() {
  GraphBuilder b;
  std::vector<int> vs;
  for (int j = 0; j < 6; ++j) vs.push_back(b.add_vertex(std::polar(1.0, kPi * j / 3)));
  for (int j = 0; j < 6; ++j) {
    int u = vs[j], v = vs[(j + 1) % 6];
    b.add_edge(u, v, 1, 0);
    b.add_edge(u, v, 0, 1);
  }
  for (int j = 0; j < 6; ++j)
    for (int tb : {0, 1}) b.add_ray(vs[j], kPi * j / 3, tb);
  return with_graph(b.build());
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = {
      {"tree1", "two towers glued along one edge; three lines", false},
      {"tree2", "tree1 plus two more vertical lines", false},
      {"tree3", "tree with a doubled (parallel) edge", false},
      {"gyroid3", "equiangular triangle of three lines with nontrivial phases", false},
      {"gyroid4", "square of four lines with quarter-turn phases", false},
      {"polygram", "simple arrangement of k >= 5 tangent lines", true},
      {"misc1", "triangle plus a parallel line through the apex", false},
      {"benzene", "hexagon with doubled edges and doubled radial rays", false},
  };
  return entries;
}

Configuration gallery_config(const std::string& name, int k) {
  if (name == "tree1") return make_tree1();
  if (name == "tree2") return make_tree2();
  if (name == "tree3") return make_tree3();
  if (name == "gyroid3" || name == "triangle") return make_gyroid3();
  if (name == "gyroid4" || name == "square") return make_gyroid4();
  if (name == "polygram") return make_polygram(k > 0 ? k : 5);
  if (name == "misc1") return make_misc1();
  if (name == "benzene") return make_benzene();
  throw Error(Err::UnknownExample, "unknown example '" + name + "'");
}

}  // namespace saddle
