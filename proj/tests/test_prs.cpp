#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/prs.hpp"

using namespace saddle;

namespace {

// tree1 skeleton: one closed edge (0,1), rays 2..7; sigma built by hand.
PseudoRotationSystem tree1_prs() {
  // v0: half-edges {0 (to v1), 2 up, 3 left, 4 down}, anticlockwise from 0
  // v1: {1 (to v0), 5 down, 6 right, 7 up}, anticlockwise from angle pi
  std::vector<int> iota{1, 0, 2, 3, 4, 5, 6, 7};
  std::vector<int> sigma{2, 5, 3, 4, 0, 6, 7, 1};
  return PseudoRotationSystem::make(iota, sigma);
}

}  // namespace

TEST_CASE("involution and transitivity are enforced") {
  CHECK_THROWS_AS(PseudoRotationSystem::make({1, 2, 0}, {0, 1, 2}), Error);  // not involution
  // two components: {0,1} and {2,3}
  CHECK_THROWS_AS(PseudoRotationSystem::make({1, 0, 3, 2}, {0, 1, 2, 3}), Error);
  try {
    PseudoRotationSystem::make({1, 0, 3, 2}, {0, 1, 2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotTransitive);
  }
}

TEST_CASE("orbits derive vertices, edges and rays") {
  auto prs = tree1_prs();
  CHECK(prs.size() == 8);
  CHECK(prs.vertex_count() == 2);
  CHECK(prs.ray_count() == 6);
  CHECK(prs.closed_edge_count() == 1);
  CHECK(prs.edge_count() == 7);
  CHECK(prs.degree(0) == 4);
  CHECK(prs.degree(1) == 4);
  CHECK(prs.vertex_of(0) != prs.vertex_of(1));
}

TEST_CASE("orientation exists for even degrees and propagates") {
  auto prs = tree1_prs();
  auto sigma = orientation(prs);
  REQUIRE(sigma.has_value());
  for (int h = 0; h < prs.size(); ++h) {
    CHECK((*sigma)[prs.next_at_vertex(h)] == -(*sigma)[h]);
    if (!prs.is_ray(h)) CHECK((*sigma)[prs.partner(h)] == -(*sigma)[h]);
  }
}

TEST_CASE("single vertex with three rays has no orientation") {
  auto prs = PseudoRotationSystem::make({0, 1, 2}, {1, 2, 0});
  CHECK(!orientation(prs).has_value());
}

TEST_CASE("face cycles of a tree are empty") {
  CHECK(face_cycles(tree1_prs()).empty());
}

TEST_CASE("property: orientation implies all vertex degrees even") {
  std::mt19937_64 rng(12345);
  int oriented_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    // random involution: pair up a random subset
    std::vector<int> iota(n), perm(n);
    for (int i = 0; i < n; ++i) iota[i] = i, perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i + 1 < n; i += 2)
      if (rng() % 2) {
        iota[perm[i]] = perm[i + 1];
        iota[perm[i + 1]] = perm[i];
      }
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    PseudoRotationSystem prs = [&]() -> PseudoRotationSystem {
      try {
        return PseudoRotationSystem::make(iota, sigma);
      } catch (const Error&) {
        return tree1_prs();  // skip non-transitive draws
      }
    }();
    if (auto s = orientation(prs)) {
      ++oriented_seen;
      for (int v = 0; v < prs.vertex_count(); ++v) CHECK(prs.degree(v) % 2 == 0);
    }
  }
  CHECK(oriented_seen > 0);
}
