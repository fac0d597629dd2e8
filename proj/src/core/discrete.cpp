#include "discrete.hpp"

#include <Eigen/SVD>

namespace saddle {

DeformationVector scaling_vector(const GeometricGraph& g) {
  auto d = DeformationVector::zero(g);
  for (int rep : g.prs.edge_reps()) d.set_x(g, rep, g.x[rep]);
  return d;
}

DeformationVector rotation_vector(const GeometricGraph& g) {
  auto d = DeformationVector::zero(g);
  for (int rep : g.prs.edge_reps()) d.set_x(g, rep, Complex{0, 1} * g.x[rep]);
  for (int r : g.prs.rays()) d.set_theta(g, r, 1.0);
  return d;
}

MinimalEdges minimal_edges(const GeometricGraph& g) {
  if (g.prs.closed_edge_count() == 0)
    throw Error(Err::NoClosedEdges, "graph has no closed edges");
  MinimalEdges me;
  me.m_of_vertex.resize(g.prs.vertex_count());
  me.min_len_of_vertex.assign(g.prs.vertex_count(), 0.0);
  for (int v = 0; v < g.prs.vertex_count(); ++v) {
    double best = 0.0;
    bool any = false;
    for (int h : g.prs.half_edges_at(v)) {
      if (g.prs.is_ray(h)) continue;
      if (!any || g.len[h] < best) best = g.len[h];
      any = true;
    }
    if (!any) continue;
    me.min_len_of_vertex[v] = best;
    for (int h : g.prs.half_edges_at(v))
      if (!g.prs.is_ray(h) && g.len[h] <= best + kGeomTol) me.m_of_vertex[v].push_back(h);
  }
  double global = 0.0;
  bool any = false;
  for (int rep : g.prs.edge_reps()) {
    if (!any || g.len[rep] < global) global = g.len[rep];
    any = true;
  }
  me.min_len = global;
  for (int rep : g.prs.edge_reps())
    if (g.len[rep] <= global + kGeomTol) {
      me.m_global.push_back(rep);
      me.m_global.push_back(g.prs.partner(rep));
    }
  return me;
}

Eigen::MatrixXd mdiv_matrix(const GeometricGraph& g, const MinimalEdges& me) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.prs.vertex_count(), g.prs.closed_edge_count());
  for (int v = 0; v < g.prs.vertex_count(); ++v)
    for (int h : me.m_of_vertex[v]) m(v, g.prs.edge_index(h)) += g.prs.rep_sign(h);
  return m;
}

double mdiv_at(const GeometricGraph& g, const MinimalEdges& me, const PhaseFunction& phi, int v) {
  double s = 0;
  for (int h : me.m_of_vertex[v]) s += phi.at(g.prs, h);
  return s;
}

int numerical_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(0) > 0 && s(i) > tol * s(0)) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

MdivBasis select_mdiv_basis(const GeometricGraph& g, const MinimalEdges& me) {
  Eigen::MatrixXd m = mdiv_matrix(g, me);
  MdivBasis basis;
  const int full = numerical_rank(m);
  Eigen::MatrixXd picked(0, m.cols());
  for (int v = 0; v < m.rows() && basis.rank < full; ++v) {
    Eigen::MatrixXd cand(picked.rows() + 1, m.cols());
    cand << picked, m.row(v);
    if (numerical_rank(cand) > basis.rank) {
      picked = std::move(cand);
      basis.cut_vertices.push_back(v);
      ++basis.rank;
    }
  }
  basis.deficient = basis.rank < g.prs.vertex_count();
  return basis;
}

}  // namespace saddle
