#pragma once

#include "vertical.hpp"

namespace saddle {

struct RayOrder {
  // Ray half-edges sorted anticlockwise starting at the smallest angle;
  // within a parallel group, by the asymptotic lateral offset.
  std::vector<int> order;
  // Consecutive (in order) rays with equal direction.
  std::vector<std::pair<int, int>> parallel_pairs;
  // Parallel groups of size >= 2, in order.
  std::vector<std::vector<int>> groups;
};

RayOrder ray_order(const GeometricGraph& g);

// Every vertex 4-valent with two opposite collinear pairs, and every maximal
// collinear chain ends in two rays (each "line" is a full line).
bool detect_line_arrangement(const GeometricGraph& g);

// max over half-edges of |theta(sigma^2 h) - theta(h) - pi| mod 2pi at a
// solved horizontal state; requires a line arrangement.
double lemma_lines_residual(const GeometricGraph& g, const Chi& chi);

enum class Tier { DistinctRays, FirstOrder, Taylor, FlatOrder };
enum class Outcome { Embedded, NotEmbedded, Inconclusive };

const char* tier_name(Tier t);
const char* outcome_name(Outcome o);

struct PairEvidence {
  int ray_low = -1, ray_high = -1;  // half-edges, in order
  Tier tier = Tier::FirstOrder;     // tier at which the pair was decided
  double separation = 0;            // signed quantity: positive = outward
  std::string status;               // "outward", "inward", "tied"
};

struct EmbeddednessVerdict {
  Outcome outcome = Outcome::Inconclusive;
  Tier tier = Tier::DistinctRays;  // deepest tier consulted
  bool heuristic = false;          // tier-4 verdict on a non-line-arrangement
  bool flat_term_underflow = false;
  std::vector<PairEvidence> evidence;
};

// Tiered classification: (1) no parallel pairs; (2) first-order theta-dot
// ordering from xi + zeta-dot; (3) persistent ordering of the continuation
// solutions at the probe epsilons; (4) flat-order ordering from zeta-hat.
// Default probes: 0.08, 0.04, 0.02.
EmbeddednessVerdict classify(const Configuration& config,
                             const std::vector<double>& eps_probes = {});

struct DeformedGraph {
  std::vector<Complex> positions;      // per vertex, anchored at vertex 0
  std::vector<double> ray_theta;       // by ray index
  double tau = 0;                      // flat factor exp(-l_min / eps^2)
  bool tau_underflow = false;          // l_min/eps^2 > 300 reported as exactly 0
};

// chi(eps) = chi~(eps) + tau(eps) zeta-hat rendered as absolute positions via
// a spanning tree from vertex 0. eps = 0 reproduces the input exactly.
DeformedGraph deformed_graph(const Configuration& config, double eps);

}  // namespace saddle
