#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace saddle {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

// A closed edge or ray as a geometric primitive. Rays have no endpoint b.
struct Prim {
  Complex a;        // base point
  Complex dir;      // unit direction
  double length;    // segment length, infinity for rays
  bool ray;
  int edge_rep;     // representative half-edge (or the ray half-edge)
};

// Overlap of the interiors of two collinear ranges [s0,s1], [t0,t1].
bool ranges_overlap(double s0, double s1, double t0, double t1) {
  return std::min(s1, t1) - std::max(s0, t0) > kGeomTol;
}

bool identical_image(const Prim& p, const Prim& q) {
  if (p.ray != q.ray) return false;
  if (p.ray)
    return std::abs(p.a - q.a) < kGeomTol && std::abs(p.dir - q.dir) < kGeomTol;
  Complex pb = p.a + p.length * p.dir, qb = q.a + q.length * q.dir;
  return (std::abs(p.a - qb) < kGeomTol && std::abs(pb - q.a) < kGeomTol) ||
         (std::abs(p.a - q.a) < kGeomTol && std::abs(pb - qb) < kGeomTol);
}

// True if the interiors of the two primitives intersect. Endpoints touching
// is fine; identical images are handled by the caller.
bool interiors_intersect(const Prim& p, const Prim& q) {
  double denom = cross(p.dir, q.dir);
  Complex d = q.a - p.a;
  if (std::abs(denom) > kGeomTol) {
    // transversal: single intersection point at parameters (s, t)
    double s = cross(d, q.dir) / denom;
    double t = cross(d, p.dir) / denom;
    bool s_interior = s > kGeomTol && (p.ray || s < p.length - kGeomTol);
    bool t_interior = t > kGeomTol && (q.ray || t < q.length - kGeomTol);
    return s_interior && t_interior;
  }
  // parallel: only collinear primitives can overlap
  if (std::abs(cross(d, p.dir)) > kGeomTol) return false;
  double same = dot(p.dir, q.dir) > 0 ? 1.0 : -1.0;
  double t0 = dot(d, p.dir);  // q.a in p's parameter
  double s0 = 0, s1 = p.ray ? std::numeric_limits<double>::infinity() : p.length;
  double u0 = t0, u1 = t0 + same * (q.ray ? std::numeric_limits<double>::infinity() : q.length);
  if (u0 > u1) std::swap(u0, u1);
  return ranges_overlap(s0, s1, u0, u1);
}

}  // namespace

GeometricGraph build_graph(const PseudoRotationSystem& prs,
                           const std::vector<Complex>& positions,
                           const std::map<int, double>& ray_angles) {
  const int n = prs.size();
  if (static_cast<int>(positions.size()) != prs.vertex_count())
    throw Error(Err::SchemaViolation, "need one position per vertex");
  for (int r : prs.rays())
    if (!ray_angles.count(r))
      throw Error(Err::SchemaViolation, "missing ray angle for half-edge " + std::to_string(r));
  for (auto& [h, a] : ray_angles) {
    (void)a;
    if (h < 0 || h >= n || !prs.is_ray(h))
      throw Error(Err::SchemaViolation, "ray angle given for non-ray half-edge " + std::to_string(h));
  }

  for (int v = 0; v < prs.vertex_count(); ++v)
    for (int w = v + 1; w < prs.vertex_count(); ++w)
      if (std::abs(positions[v] - positions[w]) < kGeomTol)
        throw Error(Err::CoincidentVertices,
                    "vertices " + std::to_string(v) + " and " + std::to_string(w) + " coincide");

  GeometricGraph g;
  g.prs = prs;
  g.positions = positions;
  g.x.assign(n, Complex{0, 0});
  g.u.assign(n, Complex{0, 0});
  g.theta.assign(n, 0.0);
  g.len.assign(n, 0.0);

  for (int h = 0; h < n; ++h) {
    if (prs.is_ray(h)) {
      double a = wrap_two_pi(ray_angles.at(h));
      g.theta[h] = a;
      g.u[h] = std::polar(1.0, a);
    } else {
      if (prs.vertex_of(h) == prs.vertex_of(prs.partner(h)))
        throw Error(Err::LoopEdge, "edge at half-edge " + std::to_string(h) + " is a loop");
      Complex vec = positions[prs.vertex_of(prs.partner(h))] - positions[prs.vertex_of(h)];
      g.x[h] = vec;
      g.len[h] = std::abs(vec);
      g.u[h] = vec / g.len[h];
      g.theta[h] = wrap_two_pi(std::arg(vec));
    }
  }

  // pairwise edge-image checks with the identical-image carve-out
  std::vector<Prim> prims;
  for (int rep : prs.edge_reps())
    prims.push_back({positions[prs.vertex_of(rep)], g.u[rep], g.len[rep], false, rep});
  for (int r : prs.rays())
    prims.push_back({positions[prs.vertex_of(r)], g.u[r], 0.0, true, r});
  for (size_t i = 0; i < prims.size(); ++i)
    for (size_t j = i + 1; j < prims.size(); ++j) {
      if (identical_image(prims[i], prims[j])) continue;
      if (interiors_intersect(prims[i], prims[j]))
        throw Error(Err::EdgeInteriorOverlap,
                    "edge images overlap at half-edges " + std::to_string(prims[i].edge_rep) +
                        " and " + std::to_string(prims[j].edge_rep));
    }

  g.faces = face_cycles(prs);
  if (g.euler_characteristic() != 1)
    throw Error(Err::EulerViolation,
                "|V|-|E|+|R|+|F| = " + std::to_string(g.euler_characteristic()) +
                    ", expected 1; the rotation system does not match the drawing");
  return g;
}

const char* vertex_class_name(VertexClass c) {
  switch (c) {
    case VertexClass::Degenerate: return "degenerate";
    case VertexClass::Special: return "special";
    case VertexClass::Ordinary: return "ordinary";
  }
  return "?";
}

VertexClass classify_vertex(const GeometricGraph& g, int v) {
  const auto& hs = g.prs.half_edges_at(v);
  const int deg = static_cast<int>(hs.size());
  // group directions mod pi and find the largest collinear class
  std::vector<double> dirs;
  for (int h : hs) dirs.push_back(std::fmod(g.theta[h], kPi));
  int largest = 0;
  for (int i = 0; i < deg; ++i) {
    int count = 0;
    for (int j = 0; j < deg; ++j) {
      double d = std::abs(dirs[i] - dirs[j]);
      d = std::min(d, kPi - d);
      if (d < kGeomTol) ++count;
    }
    largest = std::max(largest, count);
  }
  if (largest == deg) return VertexClass::Degenerate;
  if (deg >= 6 && largest == deg - 2) return VertexClass::Special;
  return VertexClass::Ordinary;
}

ParallelClasses parallel_classes(const GeometricGraph& g) {
  ParallelClasses out;
  const auto& reps = g.prs.edge_reps();
  std::vector<char> used(reps.size(), 0);
  for (size_t i = 0; i < reps.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> cls{reps[i]};
    used[i] = 1;
    Complex ai = g.positions[g.prs.vertex_of(reps[i])];
    Complex bi = ai + g.x[reps[i]];
    for (size_t j = i + 1; j < reps.size(); ++j) {
      if (used[j]) continue;
      Complex aj = g.positions[g.prs.vertex_of(reps[j])];
      Complex bj = aj + g.x[reps[j]];
      bool same = (std::abs(ai - aj) < kGeomTol && std::abs(bi - bj) < kGeomTol) ||
                  (std::abs(ai - bj) < kGeomTol && std::abs(bi - aj) < kGeomTol);
      if (same) {
        cls.push_back(reps[j]);
        used[j] = 1;
      }
    }
    out.edge_classes.push_back(std::move(cls));
  }

  const auto& rays = g.prs.rays();
  std::vector<char> rused(rays.size(), 0);
  for (size_t i = 0; i < rays.size(); ++i) {
    if (rused[i]) continue;
    std::vector<int> grp{rays[i]};
    rused[i] = 1;
    for (size_t j = i + 1; j < rays.size(); ++j) {
      if (rused[j]) continue;
      double d = std::abs(wrap_pi(g.theta[rays[i]] - g.theta[rays[j]]));
      if (d < kGeomTol) {
        grp.push_back(rays[j]);
        rused[j] = 1;
      }
    }
    if (grp.size() >= 2) out.ray_groups.push_back(std::move(grp));
  }
  return out;
}

bool is_tree(const GeometricGraph& g) {
  return std::all_of(g.faces.begin(), g.faces.end(),
                     [](const std::vector<int>& c) { return c.size() <= 2; });
}

}  // namespace saddle
