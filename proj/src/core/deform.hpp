#pragma once

#include <Eigen/Dense>

#include "graph.hpp"

namespace saddle {

// Real-valued (or complex) antisymmetric function on the closed half-edges,
// stored as one value per closed edge at its representative half-edge.
// Antisymmetry f(-h) = -f(h) is structural.
template <class T>
class AntisymmetricFn {
public:
  AntisymmetricFn() = default;
  explicit AntisymmetricFn(int edge_count) : vals_(edge_count, T{}) {}

  T at(const PseudoRotationSystem& prs, int h) const {
    return prs.rep_sign(h) > 0 ? vals_[prs.edge_index(h)] : -vals_[prs.edge_index(h)];
  }
  void set(const PseudoRotationSystem& prs, int h, T value) {
    vals_[prs.edge_index(h)] = prs.rep_sign(h) > 0 ? value : -value;
  }
  T& by_edge(int k) { return vals_[k]; }
  const T& by_edge(int k) const { return vals_[k]; }
  int edge_count() const { return static_cast<int>(vals_.size()); }

private:
  std::vector<T> vals_;
};

using PhaseFunction = AntisymmetricFn<double>;

// Element of A^2 x R: one complex x per closed edge (via its representative)
// plus one real angle per ray. Real coordinates are laid out as
// [Re x_0, Im x_0, ..., Re x_{E-1}, Im x_{E-1}, theta_0, ..., theta_{R-1}].
struct DeformationVector {
  Eigen::VectorXd c;

  static DeformationVector zero(const GeometricGraph& g) {
    DeformationVector d;
    d.c = Eigen::VectorXd::Zero(coord_dim(g));
    return d;
  }
  static int coord_dim(const GeometricGraph& g) {
    return 2 * g.prs.closed_edge_count() + g.prs.ray_count();
  }

  Complex x_at(const GeometricGraph& g, int h) const {
    int k = g.prs.edge_index(h);
    Complex rep{c[2 * k], c[2 * k + 1]};
    return g.prs.rep_sign(h) > 0 ? rep : -rep;
  }
  void set_x(const GeometricGraph& g, int h, Complex v) {
    if (g.prs.rep_sign(h) < 0) v = -v;
    int k = g.prs.edge_index(h);
    c[2 * k] = v.real();
    c[2 * k + 1] = v.imag();
  }
  double theta_at(const GeometricGraph& g, int r) const {
    return c[2 * g.prs.closed_edge_count() + g.prs.ray_index(r)];
  }
  void set_theta(const GeometricGraph& g, int r, double v) {
    c[2 * g.prs.closed_edge_count() + g.prs.ray_index(r)] = v;
  }
  double norm() const { return c.norm(); }
};

// x-dot = x0, theta-dot = 0. Always balance-preserving.
DeformationVector scaling_vector(const GeometricGraph& g);
// x-dot = i*x0, theta-dot = 1. Balance-preserving iff the graph is balanced.
DeformationVector rotation_vector(const GeometricGraph& g);

}  // namespace saddle
