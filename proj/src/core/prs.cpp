#include "prs.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace saddle {

const char* err_name(Err code) {
  switch (code) {
    case Err::NotInvolution: return "NotInvolution";
    case Err::NotTransitive: return "NotTransitive";
    case Err::CoincidentVertices: return "CoincidentVertices";
    case Err::EdgeInteriorOverlap: return "EdgeInteriorOverlap";
    case Err::LoopEdge: return "LoopEdge";
    case Err::EulerViolation: return "EulerViolation";
    case Err::FaceCycleNotSimple: return "FaceCycleNotSimple";
    case Err::SchemaViolation: return "SchemaViolation";
    case Err::PhaseNotAntisymmetric: return "PhaseNotAntisymmetric";
    case Err::UpsilonNotPositive: return "UpsilonNotPositive";
    case Err::ZeroLengthEdge: return "ZeroLengthEdge";
    case Err::NoClosedEdges: return "NoClosedEdges";
    case Err::NotRigid: return "NotRigid";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::LeftEdgeLemmaFailure: return "LeftEdgeLemmaFailure";
    case Err::NewtonDivergence: return "NewtonDivergence";
    case Err::PhaseNotBalanced: return "PhaseNotBalanced";
    case Err::NotLineArrangement: return "NotLineArrangement";
    case Err::UnknownExample: return "UnknownExample";
    case Err::Io: return "Io";
  }
  return "Unknown";
}

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

PseudoRotationSystem PseudoRotationSystem::make(std::vector<int> iota, std::vector<int> sigma) {
  if (iota.size() != sigma.size())
    throw Error(Err::SchemaViolation, "iota and sigma must have the same length");
  const int n = static_cast<int>(iota.size());
  if (n == 0) throw Error(Err::SchemaViolation, "empty half-edge set");
  if (!is_permutation(iota)) throw Error(Err::NotInvolution, "iota is not a permutation");
  if (!is_permutation(sigma)) throw Error(Err::SchemaViolation, "sigma is not a permutation");
  for (int h = 0; h < n; ++h)
    if (iota[iota[h]] != h)
      throw Error(Err::NotInvolution, "iota is not an involution at half-edge " + std::to_string(h));

  // transitivity of <iota, sigma>
  std::vector<char> reached(n, 0);
  std::deque<int> queue{0};
  reached[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    for (int next : {iota[h], sigma[h]}) {
      if (!reached[next]) {
        reached[next] = 1;
        ++count;
        queue.push_back(next);
      }
    }
  }
  if (count != n)
    throw Error(Err::NotTransitive, "iota and sigma do not act transitively on the half-edges");

  PseudoRotationSystem prs;
  prs.iota_ = std::move(iota);
  prs.sigma_ = std::move(sigma);
  prs.vertex_of_.assign(n, -1);
  prs.edge_index_.assign(n, -1);
  prs.ray_index_.assign(n, -1);

  for (int h = 0; h < n; ++h) {
    if (prs.vertex_of_[h] >= 0) continue;
    int v = prs.vertex_count_++;
    std::vector<int> orbit;
    int cur = h;
    do {
      prs.vertex_of_[cur] = v;
      orbit.push_back(cur);
      cur = prs.sigma_[cur];
    } while (cur != h);
    prs.vertex_half_edges_.push_back(std::move(orbit));
  }

  for (int h = 0; h < n; ++h) {
    if (prs.iota_[h] == h) {
      prs.ray_index_[h] = static_cast<int>(prs.rays_.size());
      prs.rays_.push_back(h);
    } else if (h < prs.iota_[h]) {
      prs.edge_reps_.push_back(h);
    }
  }
  for (int k = 0; k < static_cast<int>(prs.edge_reps_.size()); ++k) {
    int rep = prs.edge_reps_[k];
    prs.edge_index_[rep] = k;
    prs.edge_index_[prs.iota_[rep]] = k;
  }
  return prs;
}

std::vector<std::vector<int>> face_cycles(const PseudoRotationSystem& prs) {
  const int n = prs.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    std::vector<int> orbit;
    bool touches_ray = false;
    int cur = h;
    do {
      seen[cur] = 1;
      touches_ray |= prs.is_ray(cur);
      orbit.push_back(cur);
      cur = prs.next_at_vertex(prs.partner(cur));
    } while (cur != h);
    if (touches_ray) continue;
    std::set<int> vertices, edges;
    for (int x : orbit) {
      if (!vertices.insert(prs.vertex_of(x)).second || !edges.insert(prs.edge_index(x)).second)
        throw Error(Err::FaceCycleNotSimple,
                    "face orbit repeats a vertex or edge; the rotation data is not planar");
    }
    cycles.push_back(std::move(orbit));
  }
  return cycles;
}

std::optional<std::vector<signed char>> orientation(const PseudoRotationSystem& prs) {
  // Constraints: sigma flips the sign, iota flips the sign on closed edges.
  const int n = prs.size();
  std::vector<signed char> sign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int h = queue.front();
      queue.pop_front();
      auto propagate = [&](int next, signed char want) -> bool {
        if (sign[next] == 0) {
          sign[next] = want;
          queue.push_back(next);
          return true;
        }
        return sign[next] == want;
      };
      if (!propagate(prs.next_at_vertex(h), static_cast<signed char>(-sign[h]))) return std::nullopt;
      if (!prs.is_ray(h) &&
          !propagate(prs.partner(h), static_cast<signed char>(-sign[h])))
        return std::nullopt;
    }
  }
  return sign;
}

}  // namespace saddle
