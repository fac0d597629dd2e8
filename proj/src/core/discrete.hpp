#pragma once

#include "deform.hpp"

namespace saddle {

// curl over a face cycle: sum of an antisymmetric function along the cycle.
template <class T>
T curl(const PseudoRotationSystem& prs, const AntisymmetricFn<T>& f, const std::vector<int>& cycle) {
  T s{};
  for (int h : cycle) s += f.at(prs, h);
  return s;
}

template <class T>
std::vector<T> curl_all(const GeometricGraph& g, const AntisymmetricFn<T>& f) {
  std::vector<T> out;
  out.reserve(g.faces.size());
  for (const auto& c : g.faces) out.push_back(curl(g.prs, f, c));
  return out;
}

// div over a vertex cut: the summand is antisymmetric on closed half-edges and
// free on rays, so it is passed as a callable on half-edges.
template <class T, class Fn>
T div_at(const GeometricGraph& g, int v, Fn&& value_of) {
  T s{};
  for (int h : g.prs.half_edges_at(v)) s += value_of(h);
  return s;
}

struct MinimalEdges {
  std::vector<std::vector<int>> m_of_vertex;  // minimal-length closed half-edges per cut
  std::vector<double> min_len_of_vertex;      // 0 for cuts without closed edges
  std::vector<int> m_global;                  // m(H): global minimum set
  double min_len = 0.0;                       // global minimum length
};

MinimalEdges minimal_edges(const GeometricGraph& g);

// Signed membership matrix of mdiv over all vertex cuts: row v has +-1 in the
// column of edge e for each half-edge of e lying in m(b(v)).
Eigen::MatrixXd mdiv_matrix(const GeometricGraph& g, const MinimalEdges& me);

double mdiv_at(const GeometricGraph& g, const MinimalEdges& me, const PhaseFunction& phi, int v);

struct MdivBasis {
  std::vector<int> cut_vertices;  // selected vertex cuts, greedy by index
  int rank = 0;                   // rank over all vertex cuts (== |cut_vertices|)
  bool deficient = false;         // rank < |V| (diagnostic, not an error)
};

// Greedy row selection by rank growth (column-pivoted QR, relative tolerance
// kRankTol), stopping at the rank of the full matrix.
MdivBasis select_mdiv_basis(const GeometricGraph& g, const MinimalEdges& me);

// Numerical rank with threshold tol * sigma_max.
int numerical_rank(const Eigen::MatrixXd& m, double tol = kRankTol);

// Orthonormal kernel basis (columns), via SVD with the same threshold.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double tol = kRankTol);

}  // namespace saddle
