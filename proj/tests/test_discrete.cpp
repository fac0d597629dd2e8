#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/discrete.hpp"
#include "core/gallery.hpp"

using namespace saddle;

namespace {

AntisymmetricFn<Complex> edge_vectors(const GeometricGraph& g) {
  AntisymmetricFn<Complex> f(g.prs.closed_edge_count());
  for (int rep : g.prs.edge_reps()) f.set(g.prs, rep, g.x[rep]);
  return f;
}

}  // namespace

TEST_CASE("face cycles: tree has none, triangle has one of length 3") {
  CHECK(gallery_config("tree1").graph.faces.empty());
  auto tri = gallery_config("gyroid3").graph;
  REQUIRE(tri.faces.size() == 1);
  CHECK(tri.faces[0].size() == 3);
}

TEST_CASE("curl of zero and of the edge vectors") {
  auto g = gallery_config("gyroid3").graph;
  AntisymmetricFn<double> zero(g.prs.closed_edge_count());
  for (const auto& c : g.faces) CHECK(curl(g.prs, zero, c) == 0.0);
  // the geometric edge vectors close up around every face
  auto x = edge_vectors(g);
  for (const auto& c : g.faces) CHECK(std::abs(curl(g.prs, x, c)) < 1e-12);
}

TEST_CASE("curl of plus-one along the cycle counts its length") {
  auto g = gallery_config("gyroid3").graph;
  AntisymmetricFn<double> f(g.prs.closed_edge_count());
  for (int h : g.faces[0]) f.set(g.prs, h, 1.0);
  CHECK(curl(g.prs, f, g.faces[0]) == doctest::Approx(3.0));
}

TEST_CASE("div of the unit directions detects balance") {
  auto g = gallery_config("tree1").graph;
  for (int v = 0; v < g.prs.vertex_count(); ++v) {
    Complex s = div_at<Complex>(g, v, [&](int h) { return g.u[h]; });
    CHECK(std::abs(s) < 1e-12);
  }
  // two rays at right angles do not balance
  GraphBuilder b;
  int w = b.add_vertex({0, 0});
  b.add_ray(w, 0);
  b.add_ray(w, kPi / 2);
  auto g2 = b.build();
  Complex s = div_at<Complex>(g2, 0, [&](int h) { return g2.u[h]; });
  CHECK(std::abs(s) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("minimal edges") {
  // tree1: the unique closed edge is the global minimum
  {
    auto g = gallery_config("tree1").graph;
    auto me = minimal_edges(g);
    CHECK(me.m_global.size() == 2);
    CHECK(me.min_len == doctest::Approx(1.0));
  }
  // equilateral triangle: all six closed half-edges minimal
  {
    auto g = gallery_config("gyroid3").graph;
    auto me = minimal_edges(g);
    CHECK(me.m_global.size() == 6);
  }
  // path with lengths 1 and 2: the short edge is the strict minimum at the hub
  {
    GraphBuilder b;
    int a = b.add_vertex({-1, 0});
    int v = b.add_vertex({0, 0});
    int c = b.add_vertex({2, 0});
    b.add_edge(a, v);
    b.add_edge(v, c);
    b.add_ray(a, kPi / 2);
    b.add_ray(a, 3 * kPi / 2);
    b.add_ray(a, kPi);
    b.add_ray(v, kPi / 2);
    b.add_ray(v, 3 * kPi / 2);
    b.add_ray(c, kPi / 2);
    b.add_ray(c, 3 * kPi / 2);
    b.add_ray(c, 0);
    auto g = b.build();
    auto me = minimal_edges(g);
    REQUIRE(me.m_of_vertex[v].size() == 1);
    CHECK(g.len[me.m_of_vertex[v][0]] == doctest::Approx(1.0));
  }
}

TEST_CASE("no closed edges raises") {
  GraphBuilder b;
  int v = b.add_vertex({0, 0});
  for (int i = 0; i < 4; ++i) b.add_ray(v, i * kPi / 2);
  auto g = b.build();
  CHECK_THROWS_AS(minimal_edges(g), Error);
}

TEST_CASE("mdiv ranks and basis selection") {
  // tree1: rows (+1) and (-1) on one edge variable; rank 1
  {
    auto g = gallery_config("tree1").graph;
    auto me = minimal_edges(g);
    auto basis = select_mdiv_basis(g, me);
    CHECK(basis.rank == 1);
    CHECK(basis.cut_vertices.size() == 1);
    CHECK(basis.deficient);
  }
  // equilateral triangle: every edge minimal at both endpoints, so the rows
  // cancel pairwise and the rank is |V| - 1 = 2
  {
    auto g = gallery_config("gyroid3").graph;
    auto me = minimal_edges(g);
    Eigen::MatrixXd m = mdiv_matrix(g, me);
    CHECK(m.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);  // rows sum to zero
    auto basis = select_mdiv_basis(g, me);
    CHECK(basis.rank == 2);
    CHECK(basis.cut_vertices.size() == 2);
  }
  // phi == 0 maps to zero
  {
    auto g = gallery_config("gyroid3").graph;
    auto me = minimal_edges(g);
    PhaseFunction zero(g.prs.closed_edge_count());
    for (int v = 0; v < g.prs.vertex_count(); ++v) CHECK(mdiv_at(g, me, zero, v) == 0.0);
  }
}

TEST_CASE("mdiv basis rank equals the rank over all vertex cuts, any vertex order") {
  for (const char* name : {"tree1", "tree2", "tree3", "gyroid3", "gyroid4", "misc1", "benzene"}) {
    auto g = gallery_config(name).graph;
    auto me = minimal_edges(g);
    Eigen::MatrixXd m = mdiv_matrix(g, me);
    auto basis = select_mdiv_basis(g, me);
    CAPTURE(name);
    CHECK(basis.rank == numerical_rank(m));
    // permuted-order greedy reaches the same rank
    std::mt19937_64 rng(99);
    std::vector<int> order(g.prs.vertex_count());
    for (int v = 0; v < g.prs.vertex_count(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    int rank = 0;
    Eigen::MatrixXd picked(0, m.cols());
    for (int v : order) {
      Eigen::MatrixXd cand(picked.rows() + 1, m.cols());
      cand << picked, m.row(v);
      if (numerical_rank(cand) > rank) {
        picked = std::move(cand);
        ++rank;
      }
    }
    CHECK(rank == basis.rank);
  }
}

TEST_CASE("operator dimensions over the gallery: curl spans F, div spans V") {
  for (const char* name : {"tree3", "gyroid3", "gyroid4", "misc1", "benzene"}) {
    auto g = gallery_config(name).graph;
    CAPTURE(name);
    // curl rows over antisymmetric functions: |F| x (closed edges)
    Eigen::MatrixXd curl_rows = Eigen::MatrixXd::Zero(g.face_count(), g.prs.closed_edge_count());
    for (int f = 0; f < g.face_count(); ++f)
      for (int h : g.faces[f]) curl_rows(f, g.prs.edge_index(h)) += g.prs.rep_sign(h);
    CHECK(numerical_rank(curl_rows) == g.face_count());
    // div rows over A x R: |V| x (closed edges + rays)
    Eigen::MatrixXd div_rows =
        Eigen::MatrixXd::Zero(g.prs.vertex_count(), g.prs.closed_edge_count() + g.prs.ray_count());
    for (int h = 0; h < g.prs.size(); ++h) {
      int col = g.prs.is_ray(h) ? g.prs.closed_edge_count() + g.prs.ray_index(h)
                                : g.prs.edge_index(h);
      div_rows(g.prs.vertex_of(h), col) += g.prs.is_ray(h) ? 1.0 : g.prs.rep_sign(h);
    }
    CHECK(numerical_rank(div_rows) == g.prs.vertex_count());
  }
}

TEST_CASE("property: divergence of antisymmetric functions sums to zero over vertices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (const char* name : {"gyroid3", "gyroid4", "benzene"}) {
    auto g = gallery_config(name).graph;
    for (int trial = 0; trial < 10; ++trial) {
      AntisymmetricFn<double> f(g.prs.closed_edge_count());
      for (int k = 0; k < f.edge_count(); ++k) f.by_edge(k) = dist(rng);
      double total = 0;
      for (int v = 0; v < g.prs.vertex_count(); ++v)
        total += div_at<double>(g, v, [&](int h) { return g.prs.is_ray(h) ? 0.0 : f.at(g.prs, h); });
      CHECK(std::abs(total) < 1e-12);
    }
  }
}

TEST_CASE("property: curl and div are linear") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-2, 2);
  auto g = gallery_config("gyroid4").graph;
  for (int trial = 0; trial < 20; ++trial) {
    AntisymmetricFn<double> f(g.prs.closed_edge_count()), h(g.prs.closed_edge_count());
    for (int k = 0; k < f.edge_count(); ++k) {
      f.by_edge(k) = dist(rng);
      h.by_edge(k) = dist(rng);
    }
    double a = dist(rng), b = dist(rng);
    AntisymmetricFn<double> combo(g.prs.closed_edge_count());
    for (int k = 0; k < f.edge_count(); ++k) combo.by_edge(k) = a * f.by_edge(k) + b * h.by_edge(k);
    for (const auto& c : g.faces)
      CHECK(curl(g.prs, combo, c) ==
            doctest::Approx(a * curl(g.prs, f, c) + b * curl(g.prs, h, c)).epsilon(1e-12));
    for (int v = 0; v < g.prs.vertex_count(); ++v) {
      auto val = [&](const AntisymmetricFn<double>& fn) {
        return div_at<double>(g, v, [&](int hh) { return g.prs.is_ray(hh) ? 0.0 : fn.at(g.prs, hh); });
      };
      CHECK(val(combo) == doctest::Approx(a * val(f) + b * val(h)).epsilon(1e-12));
    }
  }
}
