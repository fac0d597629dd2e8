#include "report.hpp"

namespace saddle {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json graph_summary(const GeometricGraph& g) {
  json out;
  out["vertices"] = g.prs.vertex_count();
  out["edges"] = g.prs.edge_count();
  out["closed_edges"] = g.prs.closed_edge_count();
  out["rays"] = g.prs.ray_count();
  out["faces"] = g.face_count();
  out["euler"] = g.euler_characteristic();
  out["euler_ok"] = g.euler_characteristic() == 1;
  out["orientable"] = orientation(g.prs).has_value();
  json classes = json::array();
  for (int v = 0; v < g.prs.vertex_count(); ++v)
    classes.push_back(vertex_class_name(classify_vertex(g, v)));
  out["vertex_classes"] = classes;
  ParallelClasses pc = parallel_classes(g);
  json edge_classes = json::array();
  for (const auto& cls : pc.edge_classes)
    if (cls.size() > 1) edge_classes.push_back(cls);
  out["parallel_edge_classes"] = edge_classes;
  json ray_groups = json::array();
  for (const auto& grp : pc.ray_groups) ray_groups.push_back(grp);
  out["parallel_ray_groups"] = ray_groups;
  out["is_tree"] = is_tree(g);
  out["line_arrangement"] = detect_line_arrangement(g);
  return out;
}

}  // namespace

json verdict_to_json(const EmbeddednessVerdict& verdict, const GeometricGraph& g) {
  (void)g;
  json out;
  out["outcome"] = outcome_name(verdict.outcome);
  out["tier"] = tier_name(verdict.tier);
  out["heuristic"] = verdict.heuristic;
  json pairs = json::array();
  for (const auto& e : verdict.evidence)
    pairs.push_back({{"ray_low", e.ray_low},
                     {"ray_high", e.ray_high},
                     {"tier", tier_name(e.tier)},
                     {"separation", e.separation},
                     {"status", e.status}});
  out["pairs"] = pairs;
  return out;
}

json analyze(const Configuration& config, const AnalyzeOptions& options) {
  const auto& g = config.graph;
  json out;
  out["graph"] = graph_summary(g);

  HorizontalAnalysis ha = analyze_horizontal(g);
  json hor;
  hor["balance_residual"] = ha.balance_residual;
  hor["balanced"] = ha.balance_residual < kBalanceTol;
  hor["rank"] = ha.rank;
  hor["rows"] = static_cast<int>(ha.jac.rows());
  hor["rigid"] = ha.rigid;
  hor["deformation_dim"] = ha.deformation_dim();
  hor["expected_rigid_dim"] = g.prs.ray_count() - 2;
  TrivialDeformationCheck triv = contains_trivial_deformations(g, ha);
  hor["scaling_in_kernel_residual"] = triv.scaling_residual;
  hor["rotation_in_kernel_residual"] = triv.rotation_residual;
  double xi_residual = 0;
  hor["xi_in_deformation_space"] = lies_in_deformation_space(g, ha, config.xi, &xi_residual);
  hor["xi_residual"] = xi_residual;
  if (options.with_certificate) {
    RigidityCertificate cert = certify_rigidity_simple(g, options.seed);
    json cj;
    cj["success"] = cert.success;
    if (cert.success) {
      cj["rotation_angle"] = cert.rotation_angle;
      cj["min_vertex_det"] = cert.min_vertex_det;
      cj["min_face_det"] = cert.min_face_det;
      cj["agrees_with_rank"] = cert.success == ha.rigid;
    } else {
      cj["failure"] = err_name(cert.failure);
      cj["reason"] = cert.reason;
    }
    hor["certificate"] = cj;
  }
  out["horizontal"] = hor;

  json ver;
  try {
    MinimalEdges me = minimal_edges(g);
    MdivBasis basis = select_mdiv_basis(g, me);
    ver["mdiv_rank"] = basis.rank;
    ver["mdiv_basis_cuts"] = basis.cut_vertices;
    ver["mdiv_rank_deficient"] = basis.deficient;
    DeformationVector chi_dot = config.xi;
    bool have_zeta_dot = false;
    if (ha.rigid) {
      DeformationVector zeta_dot = solve_zeta_dot(config, ha);
      chi_dot.c = config.xi.c + zeta_dot.c;
      have_zeta_dot = true;
    }
    ver["chi_dot_includes_zeta_dot"] = have_zeta_dot;
    std::vector<double> k_edge = k_values(config, chi_dot);
    json kj = json::object();
    for (int rep : g.prs.edge_reps())
      kj[std::to_string(rep)] = k_edge[g.prs.edge_index(rep)];
    ver["k_values"] = kj;
    VerticalAnalysis va = vertical_rigidity(g, me, basis, k_edge, config.phase);
    ver["balance_residual"] = va.balance_residual;
    ver["balanced"] = va.balance_residual < kBalanceTol;
    Eigen::VectorXd pv = p_ver(g, config.phase);
    ver["period_residual"] = pv.size() ? pv.cwiseAbs().maxCoeff() : 0.0;
    ver["rank"] = va.rank;
    ver["kernel_dim"] = va.kernel_dim;
    ver["rigid"] = va.rigid;
    ver["phase_trivial"] = is_trivial_phase(config.phase);
  } catch (const Error& e) {
    ver["error"] = err_name(e.code());
    ver["message"] = e.what();
  }
  out["vertical"] = ver;

  if (options.with_embeddedness) {
    try {
      EmbeddednessVerdict verdict = classify(config, options.eps_probes);
      out["embeddedness"] = verdict_to_json(verdict, g);
    } catch (const Error& e) {
      out["embeddedness"] = {{"error", err_name(e.code())}, {"message", e.what()}};
    }
  }
  return out;
}

json validate_report(const Configuration& config) {
  const auto& g = config.graph;
  json out;
  out["graph"] = graph_summary(g);
  out["valid"] = true;
  json findings = json::array();
  if (!orientation(g.prs)) {
    findings.push_back("graph is not orientable (some vertex has odd degree or "
                       "the signs do not propagate)");
    out["valid"] = false;
  }
  out["findings"] = findings;
  return out;
}

json phases_report(const Configuration& config, std::uint64_t seed) {
  const auto& g = config.graph;
  HorizontalAnalysis ha = analyze_horizontal(g);
  if (ha.balance_residual > kBalanceTol)
    throw Error(Err::PhaseNotBalanced, "graph is not balanced");
  MinimalEdges me = minimal_edges(g);
  MdivBasis basis = select_mdiv_basis(g, me);
  DeformationVector chi_dot = config.xi;
  if (ha.rigid) {
    DeformationVector zeta_dot = solve_zeta_dot(config, ha);
    chi_dot.c = config.xi.c + zeta_dot.c;
  }
  std::vector<double> k_edge = k_values(config, chi_dot);
  auto solutions = solve_phases(g, me, basis, k_edge, seed);
  json out;
  out["is_tree"] = is_tree(g);
  out["count"] = solutions.size();
  json list = json::array();
  for (const auto& phi : solutions) {
    json item;
    json values = json::object();
    for (int rep : g.prs.edge_reps()) values[std::to_string(rep)] = phi.at(g.prs, rep);
    item["phase"] = values;
    item["trivial"] = is_trivial_phase(phi);
    VerticalAnalysis va = vertical_rigidity(g, me, basis, k_edge, phi);
    item["vertically_rigid"] = va.rigid;
    item["kernel_dim"] = va.kernel_dim;
    list.push_back(item);
  }
  out["solutions"] = list;
  return out;
}

}  // namespace saddle
