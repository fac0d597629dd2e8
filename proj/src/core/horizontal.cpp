#include "horizontal.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <limits>
#include <random>

namespace saddle {

Chi center_chi(const GeometricGraph& g) {
  Chi chi;
  for (int rep : g.prs.edge_reps()) chi.x_edges.push_back(g.x[rep]);
  for (int r : g.prs.rays()) chi.ray_theta.push_back(g.theta[r]);
  return chi;
}

Chi chi_plus(const GeometricGraph& g, const Chi& base, const DeformationVector& d) {
  Chi chi = base;
  for (int k = 0; k < g.prs.closed_edge_count(); ++k)
    chi.x_edges[k] += Complex{d.c[2 * k], d.c[2 * k + 1]};
  const int off = 2 * g.prs.closed_edge_count();
  for (int j = 0; j < g.prs.ray_count(); ++j) chi.ray_theta[j] += d.c[off + j];
  return chi;
}

Complex u_of_chi(const GeometricGraph& g, const Chi& chi, int h) {
  if (g.prs.is_ray(h)) return std::polar(1.0, chi.ray_theta[g.prs.ray_index(h)]);
  Complex x = chi.x_edges[g.prs.edge_index(h)] * g.prs.rep_sign(h);
  double len = std::abs(x);
  if (len < 1e-12)
    throw Error(Err::ZeroLengthEdge, "edge vector vanished at half-edge " + std::to_string(h));
  return x / len;
}

Eigen::VectorXd f_hor(const GeometricGraph& g, const Chi& chi) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * g.prs.vertex_count());
  for (int h = 0; h < g.prs.size(); ++h) {
    Complex u = u_of_chi(g, chi, h);
    int v = g.prs.vertex_of(h);
    out[2 * v] += u.real();
    out[2 * v + 1] += u.imag();
  }
  return out;
}

Eigen::VectorXd p_hor(const GeometricGraph& g, const Chi& chi) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * g.face_count());
  for (int f = 0; f < g.face_count(); ++f) {
    Complex s{0, 0};
    for (int h : g.faces[f])
      s += (chi.x_edges[g.prs.edge_index(h)] - g.x[h] * g.prs.rep_sign(h)) * g.prs.rep_sign(h);
    out[2 * f] = s.real();
    out[2 * f + 1] = s.imag();
  }
  return out;
}

Eigen::VectorXd p_hor_of(const GeometricGraph& g, const AntisymmetricFn<Complex>& f) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * g.face_count());
  for (int fi = 0; fi < g.face_count(); ++fi) {
    Complex s = curl(g.prs, f, g.faces[fi]);
    out[2 * fi] = s.real();
    out[2 * fi + 1] = s.imag();
  }
  return out;
}

Eigen::MatrixXd jacobian_at(const GeometricGraph& g, const Chi& chi) {
  const int rows = 2 * g.prs.vertex_count() + 2 * g.face_count();
  const int cols = DeformationVector::coord_dim(g);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(rows, cols);
  for (int h = 0; h < g.prs.size(); ++h) {
    int v = g.prs.vertex_of(h);
    if (g.prs.is_ray(h)) {
      Complex iu = Complex{0, 1} * u_of_chi(g, chi, h);
      int c = 2 * g.prs.closed_edge_count() + g.prs.ray_index(h);
      jac(2 * v, c) += iu.real();
      jac(2 * v + 1, c) += iu.imag();
    } else {
      // d(x/|x|) = (I - u u^T) dx / |x|; the pair partner shares the edge
      // coordinate with opposite sign.
      Complex x = chi.x_edges[g.prs.edge_index(h)] * g.prs.rep_sign(h);
      double len = std::abs(x);
      Complex u = x / len;
      double s = g.prs.rep_sign(h);
      int c = 2 * g.prs.edge_index(h);
      double ux = u.real(), uy = u.imag();
      jac(2 * v, c) += s * uy * uy / len;
      jac(2 * v, c + 1) += -s * ux * uy / len;
      jac(2 * v + 1, c) += -s * ux * uy / len;
      jac(2 * v + 1, c + 1) += s * ux * ux / len;
    }
  }
  for (int f = 0; f < g.face_count(); ++f) {
    int r = 2 * g.prs.vertex_count() + 2 * f;
    for (int h : g.faces[f]) {
      double s = g.prs.rep_sign(h);
      int c = 2 * g.prs.edge_index(h);
      jac(r, c) += s;
      jac(r + 1, c + 1) += s;
    }
  }
  return jac;
}

HorizontalAnalysis analyze_horizontal(const GeometricGraph& g) {
  HorizontalAnalysis ha;
  Chi chi = center_chi(g);
  ha.jac = jacobian_at(g, chi);
  ha.balance_residual = f_hor(g, chi).cwiseAbs().maxCoeff();
  ha.rank = numerical_rank(ha.jac);
  ha.rigid = ha.rank == ha.jac.rows();
  ha.deformation_basis = kernel_basis(ha.jac);
  return ha;
}

TrivialDeformationCheck contains_trivial_deformations(const GeometricGraph& g,
                                                      const HorizontalAnalysis& ha) {
  TrivialDeformationCheck out;
  double jac_norm = ha.jac.norm();
  auto residual = [&](const DeformationVector& d) {
    double n = d.norm();
    if (n == 0) return 0.0;
    return (ha.jac * (d.c / n)).norm() / std::max(jac_norm, 1e-300);
  };
  out.scaling_residual = residual(scaling_vector(g));
  out.rotation_residual = residual(rotation_vector(g));
  out.ok = out.scaling_residual < kKernelTol && out.rotation_residual < kKernelTol;
  return out;
}

namespace {

// Rotational unit coordinate of a half-edge variable: for closed edges the
// component of x-dot along i*u (shared with the partner), for rays the theta
// coordinate itself.
Eigen::VectorXd rotational_coordinate(const GeometricGraph& g, int h) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(DeformationVector::coord_dim(g));
  if (g.prs.is_ray(h)) {
    e[2 * g.prs.closed_edge_count() + g.prs.ray_index(h)] = 1.0;
  } else {
    int rep = std::min(h, g.prs.partner(h));
    Complex iu = Complex{0, 1} * g.u[rep];
    e[2 * g.prs.edge_index(h)] = iu.real();
    e[2 * g.prs.edge_index(h) + 1] = iu.imag();
  }
  return e;
}

Eigen::VectorXd radial_coordinate(const GeometricGraph& g, int edge_rep) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(DeformationVector::coord_dim(g));
  Complex u = g.u[edge_rep];
  e[2 * g.prs.edge_index(edge_rep)] = u.real();
  e[2 * g.prs.edge_index(edge_rep) + 1] = u.imag();
  return e;
}

}  // namespace

RigidityCertificate certify_rigidity_simple(const GeometricGraph& g, std::uint64_t seed) {
  RigidityCertificate cert;

  // Preconditions: orientable, balanced, ordinary vertices, no parallel edges
  // (identical-image closed classes, or two same-direction half-edges at one
  // vertex -- which covers doubled rays).
  if (!orientation(g.prs)) {
    cert.reason = "graph is not orientable";
    return cert;
  }
  Chi chi0 = center_chi(g);
  if (f_hor(g, chi0).cwiseAbs().maxCoeff() > kBalanceTol) {
    cert.reason = "graph is not balanced";
    return cert;
  }
  for (int v = 0; v < g.prs.vertex_count(); ++v) {
    if (classify_vertex(g, v) != VertexClass::Ordinary) {
      cert.reason = "vertex " + std::to_string(v) + " is " +
                    vertex_class_name(classify_vertex(g, v));
      return cert;
    }
    const auto& hs = g.prs.half_edges_at(v);
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        if (std::abs(wrap_pi(g.theta[hs[i]] - g.theta[hs[j]])) < kGeomTol) {
          cert.reason = "parallel edges at vertex " + std::to_string(v);
          return cert;
        }
  }
  for (const auto& cls : parallel_classes(g).edge_classes)
    if (cls.size() > 1) {
      cert.reason = "parallel closed edges present";
      return cert;
    }

  // Generic rotation: all directions and vertex abscissas must separate.
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  std::uniform_real_distribution<double> angle_dist(0.05, kPi - 0.05);
  double alpha = 0;
  bool generic = false;
  for (int attempt = 0; attempt < 8 && !generic; ++attempt) {
    alpha = angle_dist(rng);
    Complex rot = std::polar(1.0, alpha);
    generic = true;
    for (int h = 0; h < g.prs.size() && generic; ++h)
      if (std::abs((rot * g.u[h]).real()) < 1e-12) generic = false;
    for (int v = 0; v < g.prs.vertex_count() && generic; ++v)
      for (int w = v + 1; w < g.prs.vertex_count() && generic; ++w)
        if (std::abs((rot * (g.positions[v] - g.positions[w])).real()) < 1e-12) generic = false;
  }
  if (!generic) {
    cert.failure = Err::LeftEdgeLemmaFailure;
    cert.reason = "no generic rotation found";
    return cert;
  }
  cert.rotation_angle = alpha;
  Complex rot = std::polar(1.0, alpha);
  auto re_of = [&](int v) { return (rot * g.positions[v]).real(); };
  auto dir_of = [&](int h) { return rot * g.u[h]; };

  // Per-vertex: two left-pointing half-edges with the most independent pair.
  const int nv = g.prs.vertex_count();
  cert.vertex_pairs.resize(nv);
  cert.min_vertex_det = std::numeric_limits<double>::infinity();
  for (int v = 0; v < nv; ++v) {
    std::vector<int> left;
    for (int h : g.prs.half_edges_at(v))
      if (dir_of(h).real() < 0) left.push_back(h);
    if (left.size() < 2) {
      cert.failure = Err::LeftEdgeLemmaFailure;
      cert.reason = "vertex " + std::to_string(v) + " has fewer than two left-pointing edges";
      return cert;
    }
    double best = -1;
    std::array<int, 2> pick{-1, -1};
    for (size_t i = 0; i < left.size(); ++i)
      for (size_t j = i + 1; j < left.size(); ++j) {
        Complex a = dir_of(left[i]), b = dir_of(left[j]);
        double det = std::abs(a.real() * b.imag() - a.imag() * b.real());
        if (det > best) {
          best = det;
          pick = {left[i], left[j]};
        }
      }
    if (best < kGeomTol) {
      cert.failure = Err::LeftEdgeLemmaFailure;
      cert.reason = "left-pointing edges at vertex " + std::to_string(v) + " are dependent";
      return cert;
    }
    cert.vertex_pairs[v] = pick;
    cert.min_vertex_det = std::min(cert.min_vertex_det, best);
  }

  // Per-face: the two cycle edges at the face's left-most vertex.
  const int nf = g.face_count();
  cert.face_pairs.resize(nf);
  cert.min_face_det = nf ? std::numeric_limits<double>::infinity() : 0.0;
  std::vector<char> radial_used(g.prs.closed_edge_count(), 0);
  for (int f = 0; f < nf; ++f) {
    int leftmost = -1;
    for (int h : g.faces[f]) {
      int v = g.prs.vertex_of(h);
      if (leftmost < 0 || re_of(v) < re_of(leftmost)) leftmost = v;
    }
    std::vector<int> at;
    for (int h : g.faces[f]) {
      if (g.prs.vertex_of(h) == leftmost) at.push_back(h);
      if (g.prs.vertex_of(g.prs.partner(h)) == leftmost) at.push_back(g.prs.partner(h));
    }
    std::sort(at.begin(), at.end());
    at.erase(std::unique(at.begin(), at.end()), at.end());
    if (at.size() != 2) {
      cert.failure = Err::LeftEdgeLemmaFailure;
      cert.reason = "face " + std::to_string(f) + " has an ambiguous left-most corner";
      return cert;
    }
    Complex a = dir_of(at[0]), b = dir_of(at[1]);
    double det = std::abs(a.real() * b.imag() - a.imag() * b.real());
    if (det < kGeomTol) {
      cert.failure = Err::LeftEdgeLemmaFailure;
      cert.reason = "face corner directions at face " + std::to_string(f) + " are dependent";
      return cert;
    }
    for (int h : at) {
      int k = g.prs.edge_index(h);
      if (radial_used[k]) {
        cert.failure = Err::LeftEdgeLemmaFailure;
        cert.reason = "edge selected radially by two faces";
        return cert;
      }
      radial_used[k] = 1;
    }
    cert.face_pairs[f] = {g.prs.edge_index(at[0]), g.prs.edge_index(at[1])};
    cert.min_face_det = std::min(cert.min_face_det, det);
  }

  // Assemble the restricted square system and verify the block structure:
  // force rows are insensitive to the radial variables, and the two diagonal
  // parts are block lower-triangular in the descending-abscissa order.
  Eigen::MatrixXd jac = jacobian_at(g, chi0);
  const int dim = DeformationVector::coord_dim(g);
  Eigen::MatrixXd cols_rot(dim, 2 * nv), cols_rad(dim, std::max(1, 2 * nf));
  std::vector<int> vorder(nv);
  for (int v = 0; v < nv; ++v) vorder[v] = v;
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return re_of(a) > re_of(b); });
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < 2; ++j)
      cols_rot.col(2 * i + j) = rotational_coordinate(g, cert.vertex_pairs[vorder[i]][j]);
  std::vector<int> forder(nf);
  for (int f = 0; f < nf; ++f) forder[f] = f;
  auto face_key = [&](int f) {
    double best = std::numeric_limits<double>::infinity();
    for (int h : g.faces[f]) best = std::min(best, re_of(g.prs.vertex_of(h)));
    return best;
  };
  std::sort(forder.begin(), forder.end(), [&](int a, int b) { return face_key(a) > face_key(b); });
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < 2; ++j)
      cols_rad.col(2 * i + j) = radial_coordinate(g, g.prs.edge_reps()[cert.face_pairs[forder[i]][j]]);

  Eigen::MatrixXd force_rows = jac.topRows(2 * nv);
  Eigen::MatrixXd period_rows = jac.bottomRows(2 * nf);
  cert.max_coupling = nf ? (force_rows * cols_rad.leftCols(2 * nf)).cwiseAbs().maxCoeff() : 0.0;
  if (cert.max_coupling > kGeomTol) {
    cert.failure = Err::LeftEdgeLemmaFailure;
    cert.reason = "force rows depend on the radial variables";
    return cert;
  }
  auto check_triangular = [&](const Eigen::MatrixXd& m, const std::vector<int>& row_order,
                              int blocks) {
    for (int i = 0; i < blocks; ++i)
      for (int j = i + 1; j < blocks; ++j) {
        Eigen::Matrix2d b = m.block(2 * row_order[i], 2 * j, 2, 2);
        if (b.cwiseAbs().maxCoeff() > kGeomTol) return false;
      }
    return true;
  };
  if (!check_triangular(force_rows * cols_rot, vorder, nv) ||
      (nf && !check_triangular(period_rows * cols_rad.leftCols(2 * nf), forder, nf))) {
    cert.failure = Err::LeftEdgeLemmaFailure;
    cert.reason = "restricted system is not block triangular";
    return cert;
  }

  cert.success = true;
  cert.reason.clear();
  return cert;
}

DeformationVector solve_in_dperp(const GeometricGraph& g, const HorizontalAnalysis& ha,
                                 const Eigen::VectorXd& rhs) {
  if (!ha.rigid) throw Error(Err::NotRigid, "graph is not rigid");
  const int dim = DeformationVector::coord_dim(g);
  const int rows = static_cast<int>(ha.jac.rows());
  const int dcols = ha.deformation_dim();
  Eigen::MatrixXd aug(rows + dcols, dim);
  aug.topRows(rows) = ha.jac;
  aug.bottomRows(dcols) = ha.deformation_basis.transpose();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(rows + dcols);
  b.head(rows) = rhs;
  DeformationVector out;
  out.c = aug.colPivHouseholderQr().solve(b);
  double denom = ha.jac.norm() * out.c.norm() + rhs.norm();
  double res = (ha.jac * out.c - rhs).norm();
  if (denom > 0 && res > kSolveTol * denom)
    throw Error(Err::NotRigid, "linear system in D-perp left a residual of " + std::to_string(res));
  return out;
}

DeformationVector solve_zeta_dot(const Configuration& config, const HorizontalAnalysis& ha) {
  const auto& g = config.graph;
  AntisymmetricFn<Complex> mu_a(g.prs.closed_edge_count());
  for (int rep : g.prs.edge_reps())
    mu_a.set(g.prs, rep, config.mu[rep] - config.mu[g.prs.partner(rep)]);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ha.jac.rows());
  rhs.tail(2 * g.face_count()) = -p_hor_of(g, mu_a);
  return solve_in_dperp(g, ha, rhs);
}

DeformationVector solve_zeta_hat(const Configuration& config, const HorizontalAnalysis& ha,
                                 const MinimalEdges& me, const std::vector<double>& k_by_edge) {
  const auto& g = config.graph;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ha.jac.rows());
  for (int rep : me.m_global) {
    if (g.prs.rep_sign(rep) < 0) continue;  // m_global lists both half-edges
    for (int h : {rep, g.prs.partner(rep)}) {
      double w = k_by_edge[g.prs.edge_index(h)] * std::cos(config.phase.at(g.prs, h));
      Complex f = g.u[h] * w;
      int v = g.prs.vertex_of(h);
      rhs[2 * v] -= f.real();
      rhs[2 * v + 1] -= f.imag();
    }
  }
  const int off = 2 * g.prs.vertex_count();
  for (int f = 0; f < g.face_count(); ++f) {
    Complex s{0, 0};
    for (int h : g.faces[f]) {
      if (g.len[h] > me.min_len + kGeomTol) continue;
      s += g.x[h] * k_by_edge[g.prs.edge_index(h)] * std::cos(config.phase.at(g.prs, h));
    }
    rhs[off + 2 * f] -= s.real();
    rhs[off + 2 * f + 1] -= s.imag();
  }
  return solve_in_dperp(g, ha, rhs);
}

ContinuationResult continuation_solve(const Configuration& config, const HorizontalAnalysis& ha,
                                      double eps, const DeformationVector& xi) {
  const auto& g = config.graph;
  if (!ha.rigid) throw Error(Err::NotRigid, "graph is not rigid");
  Chi chi0 = center_chi(g);
  ContinuationResult out;
  if (eps == 0) {
    out.chi = chi0;
    out.zeta = DeformationVector::zero(g);
    return out;
  }

  AntisymmetricFn<Complex> mu_a(g.prs.closed_edge_count());
  for (int rep : g.prs.edge_reps())
    mu_a.set(g.prs, rep, config.mu[rep] - config.mu[g.prs.partner(rep)]);
  Eigen::VectorXd p_forced = eps * eps * p_hor_of(g, mu_a);

  const int nv2 = 2 * g.prs.vertex_count();
  const int nf2 = 2 * g.face_count();
  const int dcols = ha.deformation_dim();
  const int dim = DeformationVector::coord_dim(g);

  DeformationVector zeta = solve_zeta_dot(config, ha);
  zeta.c *= eps * eps;
  Eigen::VectorXd xi_scaled = eps * eps * xi.c;

  auto residual_of = [&](const Eigen::VectorXd& z) {
    DeformationVector total;
    total.c = xi_scaled + z;
    Chi chi = chi_plus(g, chi0, total);
    Eigen::VectorXd r(nv2 + nf2 + dcols);
    r.head(nv2) = f_hor(g, chi);
    DeformationVector zonly;
    zonly.c = z;
    r.segment(nv2, nf2) = p_hor(g, chi_plus(g, chi0, zonly)) + p_forced;
    r.tail(dcols) = ha.deformation_basis.transpose() * z;
    return r;
  };

  Eigen::VectorXd z = zeta.c;
  Eigen::VectorXd res = residual_of(z);
  double res_norm = res.norm();
  int it = 0;
  for (; it < 50 && res_norm >= kNewtonTol; ++it) {
    DeformationVector total;
    total.c = xi_scaled + z;
    Chi chi = chi_plus(g, chi0, total);
    Eigen::MatrixXd jac_chi = jacobian_at(g, chi);
    Eigen::MatrixXd m(nv2 + nf2 + dcols, dim);
    m.topRows(nv2) = jac_chi.topRows(nv2);
    // period rows are linear in zeta; use the center curl rows
    m.middleRows(nv2, nf2) = ha.jac.bottomRows(nf2);
    m.bottomRows(dcols) = ha.deformation_basis.transpose();
    Eigen::VectorXd step = m.colPivHouseholderQr().solve(-res);
    // halve on residual increase, up to 20 times
    double scale = 1.0;
    bool accepted = false;
    for (int back = 0; back < 20; ++back) {
      Eigen::VectorXd trial = z + scale * step;
      Eigen::VectorXd trial_res = residual_of(trial);
      if (trial_res.norm() < res_norm) {
        z = trial;
        res = trial_res;
        res_norm = res.norm();
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) break;
  }
  if (res_norm >= kNewtonTol)
    throw Error(Err::NewtonDivergence,
                "continuation Newton stalled at residual " + std::to_string(res_norm));

  out.zeta.c = z;
  DeformationVector total;
  total.c = xi_scaled + z;
  out.chi = chi_plus(g, chi0, total);
  out.residual = res_norm;
  out.iterations = it;
  return out;
}

bool lies_in_deformation_space(const GeometricGraph& g, const HorizontalAnalysis& ha,
                               const DeformationVector& v, double* residual) {
  (void)g;
  double n = v.norm();
  if (n == 0) {
    if (residual) *residual = 0;
    return true;
  }
  double res = (ha.jac * (v.c / n)).norm() / std::max(ha.jac.norm(), 1e-300);
  if (residual) *residual = res;
  return res < kKernelTol;
}

}  // namespace saddle
