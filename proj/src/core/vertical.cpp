#include "vertical.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <random>
#include <set>

namespace saddle {

bool is_trivial_phase(const PhaseFunction& phase) {
  for (int k = 0; k < phase.edge_count(); ++k) {
    double w = std::abs(wrap_pi(phase.by_edge(k)));
    if (w > kGeomTol && std::abs(w - kPi) > kGeomTol) return false;
  }
  return true;
}

std::vector<double> k_values(const Configuration& config, const DeformationVector& chi_dot) {
  const auto& g = config.graph;
  std::vector<double> out(g.prs.closed_edge_count());
  for (int rep : g.prs.edge_reps()) {
    double stretch = (chi_dot.x_at(g, rep) * std::conj(g.u[rep])).real();
    out[g.prs.edge_index(rep)] = config.k_coefficient_base(rep) * std::exp(-stretch);
  }
  return out;
}

Eigen::VectorXd p_ver(const GeometricGraph& g, const PhaseFunction& phase) {
  Eigen::VectorXd out(g.face_count());
  for (int f = 0; f < g.face_count(); ++f)
    out[f] = wrap_pi(curl(g.prs, phase, g.faces[f]));
  return out;
}

Eigen::VectorXd f_ver(const GeometricGraph& g, const MinimalEdges& me, const MdivBasis& basis,
                      const std::vector<double>& k_by_edge, const PhaseFunction& phase) {
  Eigen::VectorXd out(basis.cut_vertices.size());
  for (size_t i = 0; i < basis.cut_vertices.size(); ++i) {
    double s = 0;
    for (int h : me.m_of_vertex[basis.cut_vertices[i]])
      s += k_by_edge[g.prs.edge_index(h)] * std::sin(phase.at(g.prs, h));
    out[i] = s;
  }
  return out;
}

namespace {

Eigen::MatrixXd vertical_jacobian(const GeometricGraph& g, const MinimalEdges& me,
                                  const MdivBasis& basis, const std::vector<double>& k_by_edge,
                                  const PhaseFunction& phase) {
  const int cols = g.prs.closed_edge_count();
  Eigen::MatrixXd jac =
      Eigen::MatrixXd::Zero(static_cast<int>(basis.cut_vertices.size()) + g.face_count(), cols);
  for (size_t i = 0; i < basis.cut_vertices.size(); ++i)
    for (int h : me.m_of_vertex[basis.cut_vertices[i]]) {
      int k = g.prs.edge_index(h);
      jac(static_cast<int>(i), k) +=
          g.prs.rep_sign(h) * k_by_edge[k] * std::cos(phase.at(g.prs, h));
    }
  for (int f = 0; f < g.face_count(); ++f)
    for (int h : g.faces[f]) jac(static_cast<int>(basis.cut_vertices.size()) + f,
                                 g.prs.edge_index(h)) += g.prs.rep_sign(h);
  return jac;
}

}  // namespace

VerticalAnalysis vertical_rigidity(const GeometricGraph& g, const MinimalEdges& me,
                                   const MdivBasis& basis, const std::vector<double>& k_by_edge,
                                   const PhaseFunction& phase) {
  VerticalAnalysis out;
  out.jac = vertical_jacobian(g, me, basis, k_by_edge, phase);
  out.rank = numerical_rank(out.jac);
  out.kernel = kernel_basis(out.jac);
  out.kernel_dim = static_cast<int>(out.kernel.cols());
  out.rigid = out.rank == g.prs.closed_edge_count();
  Eigen::VectorXd bal = f_ver(g, me, basis, k_by_edge, phase);
  out.balance_residual = bal.size() ? bal.cwiseAbs().maxCoeff() : 0.0;
  int expected = g.prs.vertex_count() + g.face_count() - 1;
  out.row_rank_unexpected = out.rank > expected;
  return out;
}

namespace {

// Newton on (F_ver over the basis cuts, P_ver over faces) = 0 from one seed.
// Returns the converged phase or nullopt.
std::optional<PhaseFunction> newton_phases(const GeometricGraph& g, const MinimalEdges& me,
                                           const MdivBasis& basis,
                                           const std::vector<double>& k_by_edge,
                                           PhaseFunction phi) {
  const int n = phi.edge_count();
  for (int it = 0; it < 80; ++it) {
    Eigen::VectorXd fv = f_ver(g, me, basis, k_by_edge, phi);
    Eigen::VectorXd pv = p_ver(g, phi);
    Eigen::VectorXd res(fv.size() + pv.size());
    res << fv, pv;
    if (res.norm() < 1e-11) {
      for (int k = 0; k < n; ++k) phi.by_edge(k) = wrap_pi(phi.by_edge(k));
      return phi;
    }
    Eigen::MatrixXd jac = vertical_jacobian(g, me, basis, k_by_edge, phi);
    Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-res);
    if (!step.allFinite() || step.norm() > 20.0) return std::nullopt;
    for (int k = 0; k < n; ++k) phi.by_edge(k) += step[k];
  }
  return std::nullopt;
}

bool same_phase(const PhaseFunction& a, const PhaseFunction& b) {
  for (int k = 0; k < a.edge_count(); ++k)
    if (std::abs(wrap_pi(a.by_edge(k) - b.by_edge(k))) > 1e-6) return false;
  return true;
}

}  // namespace

std::vector<PhaseFunction> solve_phases(const GeometricGraph& g, const MinimalEdges& me,
                                        const MdivBasis& basis,
                                        const std::vector<double>& k_by_edge, std::uint64_t seed) {
  const int n = g.prs.closed_edge_count();
  std::vector<PhaseFunction> found;
  auto push_unique = [&](const PhaseFunction& phi) {
    for (const auto& other : found)
      if (same_phase(phi, other)) return;
    found.push_back(phi);
  };

  if (is_tree(g)) {
    // Parallel edges form 2-cycles, so the phase is constant per parallelism
    // class and the class cuts force the trivial values.
    auto classes = parallel_classes(g).edge_classes;
    // assign per class; orient class members consistently from the same vertex
    const size_t m = std::min<size_t>(classes.size(), 16);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      PhaseFunction phi(n);
      for (size_t c = 0; c < m; ++c) {
        double value = (mask >> c) & 1 ? kPi : 0.0;
        int anchor = classes[c][0];
        int anchor_vertex = g.prs.vertex_of(anchor);
        for (int rep : classes[c]) {
          int h = g.prs.vertex_of(rep) == anchor_vertex ? rep : g.prs.partner(rep);
          phi.set(g.prs, h, value);
        }
      }
      push_unique(phi);
    }
    return found;
  }

  // Seeds: trivial assignments (capped), +-pi/2 and +-2pi/3 per face cycle,
  // 16 pseudo-random.
  std::vector<PhaseFunction> seeds;
  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      PhaseFunction phi(n);
      for (int k = 0; k < n; ++k) phi.by_edge(k) = (mask >> k) & 1 ? kPi : 0.0;
      seeds.push_back(phi);
    }
  } else {
    seeds.emplace_back(n);
    PhaseFunction all_pi(n);
    for (int k = 0; k < n; ++k) all_pi.by_edge(k) = kPi;
    seeds.push_back(all_pi);
  }
  for (const auto& cyc : g.faces)
    for (double value : {kPi / 2, -kPi / 2, 2 * kPi / 3, -2 * kPi / 3}) {
      PhaseFunction phi(n);
      for (int h : cyc) phi.set(g.prs, h, value);
      seeds.push_back(phi);
    }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xda3e39cb94b95bdbULL);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (int i = 0; i < 16; ++i) {
    PhaseFunction phi(n);
    for (int k = 0; k < n; ++k) phi.by_edge(k) = dist(rng);
    seeds.push_back(phi);
  }

  for (const auto& s : seeds)
    if (auto phi = newton_phases(g, me, basis, k_by_edge, s)) push_unique(*phi);

  // Trivial solutions first, then by coordinates, for deterministic output.
  std::stable_sort(found.begin(), found.end(), [&](const PhaseFunction& a, const PhaseFunction& b) {
    bool ta = is_trivial_phase(a), tb = is_trivial_phase(b);
    if (ta != tb) return ta;
    for (int k = 0; k < n; ++k)
      if (std::abs(a.by_edge(k) - b.by_edge(k)) > 1e-9) return a.by_edge(k) < b.by_edge(k);
    return false;
  });
  return found;
}

PhaseFunction potential_to_phase(const GeometricGraph& g, const std::vector<double>& potential) {
  if (static_cast<int>(potential.size()) != g.prs.vertex_count())
    throw Error(Err::SchemaViolation, "need one potential value per vertex");
  PhaseFunction phi(g.prs.closed_edge_count());
  for (int rep : g.prs.edge_reps())
    phi.set(g.prs, rep,
            wrap_pi(potential[g.prs.vertex_of(g.prs.partner(rep))] -
                    potential[g.prs.vertex_of(rep)]));
  return phi;
}

DeformationVector gauge_transform(const GeometricGraph& g, const DeformationVector& chi_dot,
                                  Complex lambda) {
  DeformationVector out = chi_dot;
  for (int rep : g.prs.edge_reps()) out.set_x(g, rep, chi_dot.x_at(g, rep) + lambda * g.x[rep]);
  double shift = lambda == Complex{0, 0} ? 0.0 : std::arg(lambda);
  for (int r : g.prs.rays()) out.set_theta(g, r, chi_dot.theta_at(g, r) + shift);
  return out;
}

}  // namespace saddle
