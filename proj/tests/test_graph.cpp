#include <doctest.h>

#include "core/gallery.hpp"

using namespace saddle;

TEST_CASE("tree1 builds and satisfies the Euler relation") {
  auto g = gallery_config("tree1").graph;
  CHECK(g.prs.vertex_count() == 2);
  CHECK(g.prs.closed_edge_count() == 1);
  CHECK(g.prs.ray_count() == 6);
  CHECK(g.face_count() == 0);
  CHECK(g.euler_characteristic() == 1);
}

TEST_CASE("single vertex with four rays satisfies the Euler relation") {
  GraphBuilder b;
  int v = b.add_vertex({0, 0});
  for (int i = 0; i < 4; ++i) b.add_ray(v, i * kPi / 2);
  auto g = b.build();
  CHECK(g.prs.vertex_count() == 1);
  CHECK(g.prs.edge_count() == 4);
  CHECK(g.face_count() == 0);
  CHECK(g.euler_characteristic() == 1);
}

TEST_CASE("coincident vertices rejected") {
  GraphBuilder b;
  int v0 = b.add_vertex({0, 0});
  int v1 = b.add_vertex({0, 0});
  b.add_edge(v0, v1);
  CHECK_THROWS_AS(b.build(), Error);
}

TEST_CASE("loops rejected") {
  std::vector<int> iota{1, 0, 2, 3};
  std::vector<int> sigma{1, 2, 3, 0};  // both closed half-edges at one vertex
  auto prs = PseudoRotationSystem::make(iota, sigma);
  CHECK(prs.vertex_count() == 1);
  std::map<int, double> rays{{2, 0.0}, {3, kPi}};
  try {
    build_graph(prs, {{0, 0}}, rays);
    FAIL("expected LoopEdge");
  } catch (const Error& e) {
    CHECK(e.code() == Err::LoopEdge);
  }
}

TEST_CASE("crossing edge interiors rejected") {
  GraphBuilder b;
  int a = b.add_vertex({0, 0});
  int c = b.add_vertex({1, 1});
  int d = b.add_vertex({0, 1});
  int e = b.add_vertex({1, 0});
  b.add_edge(a, c);
  b.add_edge(d, e);  // crosses the first at (1/2, 1/2)
  try {
    b.build();
    FAIL("expected EdgeInteriorOverlap");
  } catch (const Error& err) {
    CHECK(err.code() == Err::EdgeInteriorOverlap);
  }
}

TEST_CASE("ray overlapping a segment rejected") {
  GraphBuilder b;
  int a = b.add_vertex({0, 0});
  int c = b.add_vertex({1, 0});
  b.add_edge(a, c);
  b.add_ray(c, kPi);  // runs back over the segment
  CHECK_THROWS_AS(b.build(), Error);
}

TEST_CASE("vertex classification") {
  // ordinary: four rays at right angles
  {
    GraphBuilder b;
    int v = b.add_vertex({0, 0});
    for (int i = 0; i < 4; ++i) b.add_ray(v, i * kPi / 2);
    auto g = b.build();
    CHECK(classify_vertex(g, 0) == VertexClass::Ordinary);
  }
  // degenerate: everything on one line
  {
    GraphBuilder b;
    int v = b.add_vertex({0, 0});
    b.add_ray(v, 0, 0);
    b.add_ray(v, 0, 1);
    b.add_ray(v, kPi, 0);
    b.add_ray(v, kPi, 1);
    auto g = b.build();
    CHECK(classify_vertex(g, 0) == VertexClass::Degenerate);
  }
  // special: 6-valent with exactly four collinear
  {
    GraphBuilder b;
    int v = b.add_vertex({0, 0});
    b.add_ray(v, 0, 0);
    b.add_ray(v, 0, 1);
    b.add_ray(v, kPi, 0);
    b.add_ray(v, kPi, 1);
    b.add_ray(v, kPi / 2);
    b.add_ray(v, 3 * kPi / 2);
    auto g = b.build();
    CHECK(g.prs.degree(0) == 6);
    CHECK(classify_vertex(g, 0) == VertexClass::Special);
  }
}

TEST_CASE("parallel classes") {
  // tree1: two vertical ray pairs, no parallel closed edges
  {
    auto g = gallery_config("tree1").graph;
    auto pc = parallel_classes(g);
    CHECK(pc.ray_groups.size() == 2);
    for (const auto& cls : pc.edge_classes) CHECK(cls.size() == 1);
  }
  // tree3: one nontrivial parallel closed-edge class
  {
    auto g = gallery_config("tree3").graph;
    auto pc = parallel_classes(g);
    bool nontrivial = false;
    for (const auto& cls : pc.edge_classes) nontrivial |= cls.size() > 1;
    CHECK(nontrivial);
  }
  // triangle: no parallel rays
  {
    auto g = gallery_config("gyroid3").graph;
    CHECK(parallel_classes(g).ray_groups.empty());
  }
}

TEST_CASE("Euler relation holds on the whole gallery") {
  for (const auto& entry : gallery_entries()) {
    auto config = gallery_config(entry.name);
    CHECK(config.graph.euler_characteristic() == 1);
  }
  CHECK(gallery_config("polygram", 8).graph.euler_characteristic() == 1);
}

TEST_CASE("gallery shapes match the expected counts") {
  struct Expect {
    const char* name;
    int k;
    int vertices, closed, rays, faces;
  };
  const Expect expectations[] = {
      {"tree1", 0, 2, 1, 6, 0},        {"tree2", 0, 4, 3, 10, 0},
      {"tree3", 0, 2, 2, 8, 1},        {"gyroid3", 0, 3, 3, 6, 1},
      {"gyroid4", 0, 4, 4, 8, 1},      {"polygram", 5, 10, 15, 10, 6},
      {"polygram", 8, 28, 48, 16, 21}, {"misc1", 0, 3, 3, 8, 1},
      {"benzene", 0, 6, 12, 12, 7}};
  for (const auto& e : expectations) {
    auto g = gallery_config(e.name, e.k).graph;
    CAPTURE(e.name);
    CHECK(g.prs.vertex_count() == e.vertices);
    CHECK(g.prs.closed_edge_count() == e.closed);
    CHECK(g.prs.ray_count() == e.rays);
    CHECK(g.face_count() == e.faces);
  }
}

TEST_CASE("benzene face structure: one hexagon and six bigons") {
  auto g = gallery_config("benzene").graph;
  int hexagons = 0, bigons = 0;
  for (const auto& c : g.faces) {
    if (c.size() == 6) ++hexagons;
    if (c.size() == 2) ++bigons;
  }
  CHECK(hexagons == 1);
  CHECK(bigons == 6);
}
