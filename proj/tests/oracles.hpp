#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <Eigen/SVD>
#include <random>

#include "core/gallery.hpp"
#include "core/horizontal.hpp"

namespace saddle::testing {

// Central finite differences of the stacked (F_hor, P_hor) map.
inline Eigen::MatrixXd fd_jacobian(const GeometricGraph& g, double step = 1e-5) {
  const int dim = DeformationVector::coord_dim(g);
  Chi chi0 = center_chi(g);
  auto eval = [&](const Eigen::VectorXd& coords) {
    DeformationVector d;
    d.c = coords;
    Chi chi = chi_plus(g, chi0, d);
    Eigen::VectorXd out(2 * g.prs.vertex_count() + 2 * g.face_count());
    out.head(2 * g.prs.vertex_count()) = f_hor(g, chi);
    out.tail(2 * g.face_count()) = p_hor(g, chi);
    return out;
  };
  Eigen::MatrixXd jac(2 * g.prs.vertex_count() + 2 * g.face_count(), dim);
  for (int c = 0; c < dim; ++c) {
    Eigen::VectorXd plus = Eigen::VectorXd::Zero(dim), minus = Eigen::VectorXd::Zero(dim);
    plus[c] = step;
    minus[c] = -step;
    jac.col(c) = (eval(plus) - eval(minus)) / (2 * step);
  }
  return jac;
}

// Minimum-norm solution of J z = rhs via the SVD pseudoinverse; lands in
// D-perp automatically since D = ker J.
inline Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& jac, const Eigen::VectorXd& rhs) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (int i = 0; i < s.size(); ++i)
    if (s(0) > 0 && s(i) > kRankTol * s(0)) inv[i] = 1.0 / s(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * rhs;
}

// The right-hand side of the flat-order system, assembled independently.
inline Eigen::VectorXd flat_rhs(const Configuration& config, const MinimalEdges& me,
                                const std::vector<double>& k_edge) {
  const auto& g = config.graph;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * g.prs.vertex_count() + 2 * g.face_count());
  for (int h = 0; h < g.prs.size(); ++h) {
    if (g.prs.is_ray(h) || g.len[h] > me.min_len + kGeomTol) continue;
    Complex f = g.u[h] * k_edge[g.prs.edge_index(h)] * std::cos(config.phase.at(g.prs, h));
    rhs[2 * g.prs.vertex_of(h)] -= f.real();
    rhs[2 * g.prs.vertex_of(h) + 1] -= f.imag();
  }
  for (int fi = 0; fi < g.face_count(); ++fi) {
    Complex s{0, 0};
    for (int h : g.faces[fi])
      if (g.len[h] <= me.min_len + kGeomTol)
        s += g.x[h] * k_edge[g.prs.edge_index(h)] * std::cos(config.phase.at(g.prs, h));
    rhs[2 * g.prs.vertex_count() + 2 * fi] -= s.real();
    rhs[2 * g.prs.vertex_count() + 2 * fi + 1] -= s.imag();
  }
  return rhs;
}

// Random simple line arrangements: balanced by construction, generically
// rigid, no parallel lines or triple points.
inline Configuration random_line_arrangement(std::mt19937_64& rng, int lines = 3) {
  std::uniform_real_distribution<double> offset(-0.4, 0.4);
  for (int attempt = 0; attempt < 50; ++attempt) {
    try {
      std::vector<std::pair<Complex, double>> spec;
      for (int i = 0; i < lines; ++i) {
        double angle = kPi * i / lines + offset(rng) * kPi / (2 * lines);
        Complex base{offset(rng), offset(rng)};
        spec.push_back({base, angle});
      }
      // reuse the gallery-side assembly through a throwaway polygram-like body
      GraphBuilder b;
      const int m = static_cast<int>(spec.size());
      std::vector<std::vector<std::pair<double, Complex>>> hits(m);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          Complex e1 = std::polar(1.0, spec[i].second), e2 = std::polar(1.0, spec[j].second);
          double den = (std::conj(e1) * e2).imag();
          if (std::abs(den) < 1e-6) throw Error(Err::EdgeInteriorOverlap, "parallel");
          Complex d = spec[j].first - spec[i].first;
          double t = (std::conj(d) * e2).imag() / den;
          Complex p = spec[i].first + t * e1;
          hits[i].push_back({t, p});
          hits[j].push_back({(std::conj(p - spec[j].first) * e2).real(), p});
        }
      std::vector<int> ids;
      std::vector<Complex> pos;
      auto vid = [&](Complex p) {
        for (size_t i = 0; i < pos.size(); ++i)
          if (std::abs(pos[i] - p) < 1e-7) return ids[i];
        ids.push_back(b.add_vertex(p));
        pos.push_back(p);
        return ids.back();
      };
      for (int i = 0; i < m; ++i) {
        std::sort(hits[i].begin(), hits[i].end(),
                  [](const auto& a, const auto& c) { return a.first < c.first; });
        std::vector<int> vs;
        for (auto& [t, p] : hits[i]) vs.push_back(vid(p));
        for (size_t k = 0; k + 1 < vs.size(); ++k) b.add_edge(vs[k], vs[k + 1]);
        b.add_ray(vs.front(), spec[i].second + kPi);
        b.add_ray(vs.back(), spec[i].second);
      }
      GeometricGraph g = b.build();
      Configuration config;
      config.phase = PhaseFunction(g.prs.closed_edge_count());
      config.upsilon.assign(g.prs.size(), 1.0);
      config.mu.assign(g.prs.size(), Complex{0, 0});
      config.xi = DeformationVector::zero(g);
      config.graph = std::move(g);
      return config;
    } catch (const Error&) {
      continue;  // degenerate draw, retry
    }
  }
  return gallery_config("gyroid3");
}

}  // namespace saddle::testing
