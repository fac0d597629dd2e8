#pragma once

#include <array>
#include <cstdint>

#include "config.hpp"
#include "discrete.hpp"

namespace saddle {

// Full horizontal state: one complex x per closed edge (antisymmetric via the
// representative) and one angle per ray. The center state carries x0, theta0.
struct Chi {
  std::vector<Complex> x_edges;    // by edge index
  std::vector<double> ray_theta;   // by ray index
};

Chi center_chi(const GeometricGraph& g);
Chi chi_plus(const GeometricGraph& g, const Chi& base, const DeformationVector& d);

// Unit directions at a horizontal state; throws ZeroLengthEdge when an edge
// vector vanishes.
Complex u_of_chi(const GeometricGraph& g, const Chi& chi, int h);

// Horizontal forces div(u(chi)) stacked as [Re, Im] per vertex (2|V|).
Eigen::VectorXd f_hor(const GeometricGraph& g, const Chi& chi);
// Horizontal periods curl(x - x0) stacked as [Re, Im] per face (2|F|),
// evaluated on the displacement so the center value is exactly zero.
Eigen::VectorXd p_hor(const GeometricGraph& g, const Chi& chi);
// curl of an arbitrary antisymmetric complex function, stacked per face.
Eigen::VectorXd p_hor_of(const GeometricGraph& g, const AntisymmetricFn<Complex>& f);

// Dense derivative of (F_hor, P_hor) in the DeformationVector coordinates:
// rows are [Re, Im] per vertex then [Re, Im] per face.
Eigen::MatrixXd jacobian_at(const GeometricGraph& g, const Chi& chi);

struct HorizontalAnalysis {
  Eigen::MatrixXd jac;           // (2|V|+2|F|) x dim
  double balance_residual = 0;   // max |F_hor| component at the center
  int rank = 0;
  bool rigid = false;            // rank == 2|V|+2|F|
  Eigen::MatrixXd deformation_basis;  // orthonormal columns spanning D
  int deformation_dim() const { return static_cast<int>(deformation_basis.cols()); }
};

HorizontalAnalysis analyze_horizontal(const GeometricGraph& g);

// Checks that the scaling and rotation vectors lie in D (residual below
// kKernelTol relative to ||J||).
struct TrivialDeformationCheck {
  double scaling_residual = 0;
  double rotation_residual = 0;
  bool ok = false;
};
TrivialDeformationCheck contains_trivial_deformations(const GeometricGraph& g,
                                                      const HorizontalAnalysis& ha);

// Constructive rigidity witness: after a generic rotation, picks two
// left-pointing half-edges per vertex (rotational variables) and the two face
// edges at each face's left-most vertex (radial variables); the restricted
// square matrix is block lower-triangular with 2x2 diagonal blocks that are
// invertible exactly when the picked directions are independent.
struct RigidityCertificate {
  bool success = false;
  Err failure = Err::PreconditionViolated;
  std::string reason;
  double rotation_angle = 0;
  std::vector<std::array<int, 2>> vertex_pairs;  // per vertex, chosen half-edges
  std::vector<std::array<int, 2>> face_pairs;    // per face, chosen edge reps
  double min_vertex_det = 0;
  double min_face_det = 0;
  double max_coupling = 0;  // largest |entry| of the force-rows x radial-vars block
};

RigidityCertificate certify_rigidity_simple(const GeometricGraph& g, std::uint64_t seed = 0);

// Unique minimum-norm solution in D-perp of
//   DF_hor(chi0) . zeta = f_rhs,  P_hor(zeta) = p_rhs,
// via the pseudoinverse of the stacked system augmented with D-orthogonality
// rows. Throws NotRigid when the analysis says so.
DeformationVector solve_in_dperp(const GeometricGraph& g, const HorizontalAnalysis& ha,
                                 const Eigen::VectorXd& rhs);

// First-order correction: P_hor(zeta) = -P_hor(mu^a), DF.zeta = 0.
DeformationVector solve_zeta_dot(const Configuration& config, const HorizontalAnalysis& ha);

// Flat-order correction, with K from the vertical module at chi-dot:
//   P_hor(zeta) = -sum_{h in c ∩ m(H)} x_h K_h cos(phi_h)
//   DF_v . zeta = -sum_{h in v ∩ m(H)} u_h K_h cos(phi_h)
DeformationVector solve_zeta_hat(const Configuration& config, const HorizontalAnalysis& ha,
                                 const MinimalEdges& me, const std::vector<double>& k_by_edge);

struct ContinuationResult {
  Chi chi;                  // the solved state chi0 + eps^2 xi + zeta
  DeformationVector zeta;   // the D-perp part
  double residual = 0;
  int iterations = 0;
};

// Solves F_hor(chi) = 0 with P_hor(zeta) = -eps^2 P_hor(mu^a) and
// zeta in D-perp, chi = chi0 + eps^2 xi + zeta, by damped Newton from
// zeta = eps^2 zeta_dot.
ContinuationResult continuation_solve(const Configuration& config, const HorizontalAnalysis& ha,
                                      double eps, const DeformationVector& xi);

// Membership check used for prescribed deformations.
bool lies_in_deformation_space(const GeometricGraph& g, const HorizontalAnalysis& ha,
                               const DeformationVector& v, double* residual = nullptr);

}  // namespace saddle
