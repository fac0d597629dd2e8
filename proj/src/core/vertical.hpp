#pragma once

#include <cstdint>

#include "horizontal.hpp"

namespace saddle {

bool is_trivial_phase(const PhaseFunction& phase);

// Coupling coefficients K_h = Upsilon_h Upsilon_{-h} exp(-Re(x-dot_h * conj(u_h)))
// per closed edge, evaluated at the first-order deformation chi-dot.
std::vector<double> k_values(const Configuration& config, const DeformationVector& chi_dot);

// Vertical periods curl(phi) per face, wrapped to (-pi, pi].
Eigen::VectorXd p_ver(const GeometricGraph& g, const PhaseFunction& phase);

// Vertical forces mdiv(K sin phi) over the selected cut basis.
Eigen::VectorXd f_ver(const GeometricGraph& g, const MinimalEdges& me, const MdivBasis& basis,
                      const std::vector<double>& k_by_edge, const PhaseFunction& phase);

struct VerticalAnalysis {
  Eigen::MatrixXd jac;      // (|B_m^*| + |F|) x (|E| - |R|)
  int rank = 0;
  int kernel_dim = 0;
  bool rigid = false;       // full column rank
  Eigen::MatrixXd kernel;   // sliding modes (orthonormal columns)
  double balance_residual = 0;
  // Observed row-count window flag, see module notes: expected rank is
  // |V| + |F| - 1 for uniform minimum structures.
  bool row_rank_unexpected = false;
};

VerticalAnalysis vertical_rigidity(const GeometricGraph& g, const MinimalEdges& me,
                                   const MdivBasis& basis, const std::vector<double>& k_by_edge,
                                   const PhaseFunction& phase);

// Balanced phase functions. Trees are enumerated exactly (trivial values per
// parallelism class); other graphs run Newton from trivial, per-face-cycle and
// pseudo-random seeds and return the distinct converged solutions.
std::vector<PhaseFunction> solve_phases(const GeometricGraph& g, const MinimalEdges& me,
                                        const MdivBasis& basis,
                                        const std::vector<double>& k_by_edge,
                                        std::uint64_t seed = 0);

// phi_h = potential(v(-h)) - potential(v(h)) mod 2pi; curl-free by telescoping.
PhaseFunction potential_to_phase(const GeometricGraph& g, const std::vector<double>& potential);

// (x-dot, theta-dot) -> (x-dot + lambda x0, theta-dot + arg lambda). Rescales
// every F_ver_b by exp(-l_b Re lambda) and so preserves the balanced set.
DeformationVector gauge_transform(const GeometricGraph& g, const DeformationVector& chi_dot,
                                  Complex lambda);

}  // namespace saddle
