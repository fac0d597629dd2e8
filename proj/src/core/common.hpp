#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace saddle {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Error taxonomy shared by the core, the C API and the CLI.
enum class Err {
  NotInvolution,
  NotTransitive,
  CoincidentVertices,
  EdgeInteriorOverlap,
  LoopEdge,
  EulerViolation,
  FaceCycleNotSimple,
  SchemaViolation,
  PhaseNotAntisymmetric,
  UpsilonNotPositive,
  ZeroLengthEdge,
  NoClosedEdges,
  NotRigid,
  PreconditionViolated,
  LeftEdgeLemmaFailure,
  NewtonDivergence,
  PhaseNotBalanced,
  NotLineArrangement,
  UnknownExample,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(Err code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

const char* err_name(Err code);

// Geometric predicates (collinearity, identical images, parallel rays) use an
// absolute tolerance; gallery inputs are built from exact angles so this only
// guards float noise.
inline constexpr double kGeomTol = 1e-9;
// Relative singular-value threshold for every numerical rank decision.
inline constexpr double kRankTol = 1e-10;
// Kernel/trivial-deformation membership: ||J v|| < tol * ||J|| for unit v.
inline constexpr double kKernelTol = 1e-9;
// Relative residual bound for the linear solves in D-perp.
inline constexpr double kSolveTol = 1e-10;
// Newton convergence threshold for the continuation and phase solvers.
inline constexpr double kNewtonTol = 1e-12;
// Balance thresholds for F_hor / F_ver checks.
inline constexpr double kBalanceTol = 1e-9;

// Wraps an angle to (-pi, pi].
inline double wrap_pi(double a) {
  double w = std::remainder(a, kTwoPi);
  if (w <= -kPi) w = kPi;
  return w;
}

// Wraps an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

}  // namespace saddle
