#include "embed.hpp"

#include <algorithm>
#include <deque>

namespace saddle {

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::DistinctRays: return "DistinctRays";
    case Tier::FirstOrder: return "FirstOrder";
    case Tier::Taylor: return "Taylor";
    case Tier::FlatOrder: return "FlatOrder";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Embedded: return "Embedded";
    case Outcome::NotEmbedded: return "NotEmbedded";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

RayOrder ray_order(const GeometricGraph& g) {
  RayOrder out;
  out.order = g.prs.rays();
  if (out.order.empty()) return out;
  double min_angle = g.theta[*std::min_element(
      out.order.begin(), out.order.end(),
      [&](int a, int b) { return g.theta[a] < g.theta[b]; })];
  auto key_angle = [&](int r) {
    double a = wrap_two_pi(g.theta[r] - min_angle);
    // keep the smallest angle exactly at zero despite float noise
    return a < kGeomTol || a > kTwoPi - kGeomTol ? 0.0 : a;
  };
  // asymptotic anticlockwise offset among parallel rays
  auto lateral = [&](int r) {
    return (g.positions[g.prs.vertex_of(r)] * std::polar(1.0, -g.theta[r])).imag();
  };
  std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    double ka = key_angle(a), kb = key_angle(b);
    if (std::abs(ka - kb) > kGeomTol) return ka < kb;
    double la = lateral(a), lb = lateral(b);
    if (std::abs(la - lb) > kGeomTol) return la < lb;
    return a < b;
  });
  for (size_t i = 0; i + 1 < out.order.size();) {
    size_t j = i + 1;
    while (j < out.order.size() &&
           std::abs(wrap_pi(g.theta[out.order[j]] - g.theta[out.order[i]])) < kGeomTol)
      ++j;
    if (j - i >= 2) {
      out.groups.emplace_back(out.order.begin() + i, out.order.begin() + j);
      for (size_t k = i; k + 1 < j; ++k)
        out.parallel_pairs.emplace_back(out.order[k], out.order[k + 1]);
    }
    i = j;
  }
  return out;
}

bool detect_line_arrangement(const GeometricGraph& g) {
  // 4-valent vertices with two opposite collinear pairs
  for (int v = 0; v < g.prs.vertex_count(); ++v) {
    const auto& hs = g.prs.half_edges_at(v);
    if (hs.size() != 4) return false;
    // pair each half-edge with an opposite partner
    std::vector<int> mate(4, -1);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        if (std::abs(wrap_pi(g.theta[hs[i]] - g.theta[hs[j]] - kPi)) < kGeomTol) mate[i] = j;
      }
    for (int i = 0; i < 4; ++i)
      if (mate[i] < 0 || mate[mate[i]] != i) return false;
  }
  // every maximal collinear chain must end in rays on both sides
  std::vector<char> seen(g.prs.size(), 0);
  for (int start = 0; start < g.prs.size(); ++start) {
    if (seen[start] || g.prs.is_ray(start)) continue;
    // walk the line through this closed edge in both directions
    auto continue_through = [&](int incoming) -> int {
      // incoming arrives at v(incoming-partner); find the continuation there
      int arrived = g.prs.partner(incoming);
      for (int h : g.prs.half_edges_at(g.prs.vertex_of(arrived)))
        if (h != arrived && std::abs(wrap_pi(g.theta[h] - g.theta[incoming])) < kGeomTol) return h;
      return -1;
    };
    for (int dir : {start, g.prs.partner(start)}) {
      int cur = dir;
      seen[cur] = 1;
      seen[g.prs.partner(cur)] = 1;
      while (true) {
        int next = continue_through(cur);
        if (next < 0) return false;  // chain dead-ends at a vertex
        if (g.prs.is_ray(next)) break;
        if (seen[next]) break;
        seen[next] = 1;
        seen[g.prs.partner(next)] = 1;
        cur = next;
      }
    }
  }
  return true;
}

double lemma_lines_residual(const GeometricGraph& g, const Chi& chi) {
  if (!detect_line_arrangement(g))
    throw Error(Err::NotLineArrangement, "graph is not a simple line arrangement");
  double worst = 0;
  for (int h = 0; h < g.prs.size(); ++h) {
    int opposite = g.prs.next_at_vertex(g.prs.next_at_vertex(h));
    double ta = std::arg(u_of_chi(g, chi, h));
    double tb = std::arg(u_of_chi(g, chi, opposite));
    worst = std::max(worst, std::abs(wrap_pi(tb - ta - kPi)));
  }
  return worst;
}

namespace {

double theta_of(const GeometricGraph& g, const Chi& chi, int r) {
  return chi.ray_theta[g.prs.ray_index(r)];
}

}  // namespace

EmbeddednessVerdict classify(const Configuration& config, const std::vector<double>& eps_probes) {
  const auto& g = config.graph;
  EmbeddednessVerdict verdict;
  RayOrder order = ray_order(g);

  // Tier 1 needs only the graph.
  if (order.parallel_pairs.empty()) {
    verdict.outcome = Outcome::Embedded;
    verdict.tier = Tier::DistinctRays;
    return verdict;
  }

  HorizontalAnalysis ha = analyze_horizontal(g);
  if (ha.balance_residual > kBalanceTol)
    throw Error(Err::NotRigid, "graph is not balanced");
  if (!ha.rigid) throw Error(Err::NotRigid, "graph is not rigid");
  MinimalEdges me = minimal_edges(g);
  MdivBasis basis = select_mdiv_basis(g, me);
  DeformationVector zeta_dot = solve_zeta_dot(config, ha);
  DeformationVector chi_dot;
  chi_dot.c = config.xi.c + zeta_dot.c;
  std::vector<double> k_edge = k_values(config, chi_dot);
  Eigen::VectorXd fv = f_ver(g, me, basis, k_edge, config.phase);
  if (fv.size() && fv.cwiseAbs().maxCoeff() > kBalanceTol)
    throw Error(Err::PhaseNotBalanced,
                "vertical forces do not vanish for the prescribed phases");
  Eigen::VectorXd pv = p_ver(g, config.phase);
  if (pv.size() && pv.cwiseAbs().maxCoeff() > kBalanceTol)
    throw Error(Err::PhaseNotBalanced, "prescribed phases violate the vertical periods");

  struct Pending {
    int low, high;
  };
  std::vector<Pending> pending;

  // Tier 2: first-order ray comparison.
  verdict.tier = Tier::FirstOrder;
  bool any_inward = false;
  for (auto [low, high] : order.parallel_pairs) {
    double diff = chi_dot.theta_at(g, high) - chi_dot.theta_at(g, low);
    if (diff > 1e-10) {
      verdict.evidence.push_back({low, high, Tier::FirstOrder, diff, "outward"});
    } else if (diff < -1e-10) {
      verdict.evidence.push_back({low, high, Tier::FirstOrder, diff, "inward"});
      any_inward = true;
    } else {
      pending.push_back({low, high});
    }
  }

  // Tier 3: persistent strict ordering of the analytic continuation.
  if (!pending.empty()) {
    verdict.tier = Tier::Taylor;
    std::vector<double> probes = eps_probes.empty()
                                     ? std::vector<double>{0.08, 0.04, 0.02}
                                     : eps_probes;
    std::vector<Chi> solved;
    solved.reserve(probes.size());
    for (double eps : probes)
      solved.push_back(continuation_solve(config, ha, eps, config.xi).chi);
    std::vector<Pending> still;
    for (auto [low, high] : pending) {
      int outward = 0, inward = 0;
      double last = 0;
      for (const Chi& chi : solved) {
        double diff = theta_of(g, chi, high) - theta_of(g, chi, low);
        last = diff;
        if (diff > 1e-11) ++outward;
        else if (diff < -1e-11) ++inward;
      }
      if (outward == static_cast<int>(solved.size())) {
        verdict.evidence.push_back({low, high, Tier::Taylor, last, "outward"});
      } else if (inward == static_cast<int>(solved.size())) {
        verdict.evidence.push_back({low, high, Tier::Taylor, last, "inward"});
        any_inward = true;
      } else {
        still.push_back({low, high});
      }
    }
    pending = std::move(still);
  }

  // Tier 4: flat-order comparison via zeta-hat.
  bool any_tied = false;
  if (!pending.empty()) {
    verdict.tier = Tier::FlatOrder;
    verdict.heuristic = !detect_line_arrangement(g);
    DeformationVector zeta_hat = solve_zeta_hat(config, ha, me, k_edge);
    for (auto [low, high] : pending) {
      double diff = zeta_hat.theta_at(g, high) - zeta_hat.theta_at(g, low);
      if (diff > 1e-10) {
        verdict.evidence.push_back({low, high, Tier::FlatOrder, diff, "outward"});
      } else if (diff < -1e-10) {
        verdict.evidence.push_back({low, high, Tier::FlatOrder, diff, "inward"});
        any_inward = true;
      } else {
        verdict.evidence.push_back({low, high, Tier::FlatOrder, diff, "tied"});
        any_tied = true;
      }
    }
  }

  if (any_inward) verdict.outcome = Outcome::NotEmbedded;
  else if (any_tied) verdict.outcome = Outcome::Inconclusive;
  else verdict.outcome = Outcome::Embedded;

  // deterministic evidence order: by position of the pair in the ray order
  std::stable_sort(verdict.evidence.begin(), verdict.evidence.end(),
                   [&](const PairEvidence& a, const PairEvidence& b) {
                     return std::make_pair(a.ray_low, a.ray_high) <
                            std::make_pair(b.ray_low, b.ray_high);
                   });
  return verdict;
}

DeformedGraph deformed_graph(const Configuration& config, double eps) {
  const auto& g = config.graph;
  DeformedGraph out;
  if (eps == 0) {
    out.positions = g.positions;
    for (int r : g.prs.rays()) out.ray_theta.push_back(g.theta[r]);
    out.tau = 0;
    return out;
  }

  HorizontalAnalysis ha = analyze_horizontal(g);
  ContinuationResult cont = continuation_solve(config, ha, eps, config.xi);
  MinimalEdges me = minimal_edges(g);
  MdivBasis basis = select_mdiv_basis(g, me);
  DeformationVector zeta_dot = solve_zeta_dot(config, ha);
  DeformationVector chi_dot;
  chi_dot.c = config.xi.c + zeta_dot.c;
  DeformationVector zeta_hat = solve_zeta_hat(config, ha, me, k_values(config, chi_dot));

  double exponent = me.min_len / (eps * eps);
  if (exponent > 300) {
    out.tau = 0;
    out.tau_underflow = true;
  } else {
    out.tau = std::exp(-exponent);
  }

  Chi chi = cont.chi;
  for (int k = 0; k < g.prs.closed_edge_count(); ++k)
    chi.x_edges[k] += out.tau * Complex{zeta_hat.c[2 * k], zeta_hat.c[2 * k + 1]};
  const int off = 2 * g.prs.closed_edge_count();
  for (int j = 0; j < g.prs.ray_count(); ++j) chi.ray_theta[j] += out.tau * zeta_hat.c[off + j];

  // integrate positions over a spanning tree anchored at vertex 0
  out.positions.assign(g.prs.vertex_count(), Complex{0, 0});
  std::vector<char> placed(g.prs.vertex_count(), 0);
  out.positions[0] = g.positions[0];
  placed[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int h : g.prs.half_edges_at(v)) {
      if (g.prs.is_ray(h)) continue;
      int w = g.prs.vertex_of(g.prs.partner(h));
      if (placed[w]) continue;
      out.positions[w] =
          out.positions[v] + chi.x_edges[g.prs.edge_index(h)] * g.prs.rep_sign(h);
      placed[w] = 1;
      queue.push_back(w);
    }
  }
  out.ray_theta = chi.ray_theta;
  return out;
}

}  // namespace saddle
