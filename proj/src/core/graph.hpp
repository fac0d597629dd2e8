#pragma once

#include <map>
#include <vector>

#include "prs.hpp"

namespace saddle {

// A pseudo rotation system together with a straight-line representation:
// distinct vertex positions, segments for closed edges, rays for open ones.
// Directions, lengths and edge vectors are cached per half-edge at build time.
struct GeometricGraph {
  PseudoRotationSystem prs;
  std::vector<Complex> positions;  // per vertex

  // per half-edge caches (x/len are zero for rays)
  std::vector<Complex> x;      // edge vector from v(h) to v(-h)
  std::vector<Complex> u;      // unit direction at v(h)
  std::vector<double> theta;   // direction angle in [0, 2pi)
  std::vector<double> len;

  std::vector<std::vector<int>> faces;  // face cycles, cached

  int face_count() const { return static_cast<int>(faces.size()); }
  int euler_characteristic() const {
    return prs.vertex_count() - prs.edge_count() + prs.ray_count() + face_count();
  }
};

// Validates every graph invariant (distinct positions, no loops, disjoint or
// identical edge interiors, Euler relation) and caches the derived data.
GeometricGraph build_graph(const PseudoRotationSystem& prs,
                           const std::vector<Complex>& positions,
                           const std::map<int, double>& ray_angles);

enum class VertexClass { Degenerate, Special, Ordinary };

const char* vertex_class_name(VertexClass c);

// Degenerate: all directions at v collinear. Special: deg(v) >= 6 with exactly
// deg(v)-2 collinear directions. Ordinary otherwise.
VertexClass classify_vertex(const GeometricGraph& g, int v);

struct ParallelClasses {
  // Closed edges grouped by identical segment image; each class lists edge
  // representatives. Singleton classes included.
  std::vector<std::vector<int>> edge_classes;
  // Rays grouped by equal direction; only groups of size >= 2.
  std::vector<std::vector<int>> ray_groups;
};

ParallelClasses parallel_classes(const GeometricGraph& g);

// No cycle of length > 2, i.e. every face cycle is a bigon.
bool is_tree(const GeometricGraph& g);

}  // namespace saddle
