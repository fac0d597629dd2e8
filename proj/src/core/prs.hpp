#pragma once

#include <optional>
#include <vector>

#include "common.hpp"

namespace saddle {

// Combinatorial skeleton: a finite half-edge set with an involution `iota`
// (fixed points are rays) and a rotation permutation `sigma` whose orbits are
// the vertices. The group generated by the two permutations must act
// transitively on the half-edges.
class PseudoRotationSystem {
public:
  PseudoRotationSystem() = default;  // empty; populate via make()
  static PseudoRotationSystem make(std::vector<int> iota, std::vector<int> sigma);

  int size() const { return static_cast<int>(iota_.size()); }
  int partner(int h) const { return iota_[h]; }
  int next_at_vertex(int h) const { return sigma_[h]; }
  bool is_ray(int h) const { return iota_[h] == h; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int vertex_count() const { return vertex_count_; }
  int degree(int v) const { return static_cast<int>(vertex_half_edges_[v].size()); }

  const std::vector<int>& iota() const { return iota_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& rays() const { return rays_; }
  // One representative per closed edge: min(h, iota(h)), ascending.
  const std::vector<int>& edge_reps() const { return edge_reps_; }
  // Half-edges of vertex v in sigma-cycle order.
  const std::vector<int>& half_edges_at(int v) const { return vertex_half_edges_[v]; }

  int closed_edge_count() const { return static_cast<int>(edge_reps_.size()); }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  // |E| counts closed and open edges alike.
  int edge_count() const { return closed_edge_count() + ray_count(); }

  // Index of e(h) into edge_reps(), or -1 for rays.
  int edge_index(int h) const { return edge_index_[h]; }
  // Index of a ray into rays(), or -1 for closed half-edges.
  int ray_index(int h) const { return ray_index_[h]; }
  // +1 if h is its edge's representative, -1 otherwise (rays: +1).
  double rep_sign(int h) const { return is_ray(h) || h < iota_[h] ? 1.0 : -1.0; }

private:
  std::vector<int> iota_, sigma_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<int>> vertex_half_edges_;
  std::vector<int> rays_, edge_reps_;
  std::vector<int> edge_index_, ray_index_;
  int vertex_count_ = 0;
};

// Orbits of sigma*iota contained in the closed half-edges. Each orbit is a
// face cycle; repeated vertices or edges within an orbit are rejected.
std::vector<std::vector<int>> face_cycles(const PseudoRotationSystem& prs);

// An orientation with sigma(h) sign-alternating and iota sign-flipping, found
// by parity-constrained breadth-first propagation; empty if none exists.
std::optional<std::vector<signed char>> orientation(const PseudoRotationSystem& prs);

}  // namespace saddle
