#pragma once

#include "config.hpp"

namespace saddle {

// Assembles a pseudo rotation system from vertices, segments and rays; the
// rotation at each vertex is the anticlockwise angular order, with an explicit
// tiebreak rank for parallel half-edges at the same vertex.
class GraphBuilder {
public:
  int add_vertex(Complex position);
  // returns the two half-edge ids (u-side, v-side)
  std::pair<int, int> add_edge(int u, int v, int tiebreak_u = 0, int tiebreak_v = 0);
  int add_ray(int v, double angle, int tiebreak = 0);
  GeometricGraph build() const;

private:
  struct Half {
    int vertex;
    double angle;
    int tiebreak;
    int partner;  // self for rays
  };
  std::vector<Complex> positions_;
  std::vector<Half> halves_;
  std::vector<double> ray_angles_;  // by half-edge id (NaN for closed)
};

struct GalleryEntry {
  std::string name;
  std::string summary;
  bool parametrized = false;  // accepts k (polygram)
};

const std::vector<GalleryEntry>& gallery_entries();

// Builds a gallery configuration. k is only honored by "polygram" (default 5).
// Known names: tree1, tree2, tree3, gyroid3, gyroid4, polygram, misc1, benzene.
Configuration gallery_config(const std::string& name, int k = 0);

}  // namespace saddle
