#include "cheeger2d/inner_parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheeger2d/errors.hpp"

namespace cheeger2d {

namespace {

// Clips a convex vertex loop by {x : dot(n, x) <= c}.
std::vector<Vec2> clip(const std::vector<Vec2>& poly, Vec2 n, double c) {
  std::vector<Vec2> out;
  const std::size_t m = poly.size();
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % m];
    double da = dot(n, a) - c, db = dot(n, b) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      double s = da / (da - db);
      out.push_back(a + s * (b - a));
    }
  }
  return out;
}

// Same, but carries one plane id per edge (ids[i] belongs to the edge from
// vertex i to vertex i+1), so final vertices can be recomputed exactly from
// their two defining planes.  Negative ids mark the artificial start box.
void clip_tracked(std::vector<Vec2>& poly, std::vector<int>& ids, Vec2 n,
                  double c, int id) {
  std::vector<Vec2> out;
  std::vector<int> out_ids;
  const std::size_t m = poly.size();
  out.reserve(m + 1);
  out_ids.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % m];
    int eid = ids[i];
    double da = dot(n, a) - c, db = dot(n, b) - c;
    if (da <= 0.0 && db <= 0.0) {
      out.push_back(a);
      out_ids.push_back(eid);
    } else if (da <= 0.0 && db > 0.0) {
      out.push_back(a);
      out_ids.push_back(eid);
      double s = da / (da - db);
      out.push_back(a + s * (b - a));
      out_ids.push_back(id);  // boundary follows the clip plane from here
    } else if (da > 0.0 && db <= 0.0) {
      double s = da / (da - db);
      out.push_back(a + s * (b - a));
      out_ids.push_back(eid);  // crossing back onto the original edge
    }
  }
  poly = std::move(out);
  ids = std::move(out_ids);
}

std::optional<ConvexPolygon> finish(std::vector<Vec2> verts,
                                    const std::vector<HalfPlane>& planes,
                                    double feas_tol) {
  if (verts.size() < 3) return std::nullopt;
  for (Vec2 v : verts)
    for (const HalfPlane& p : planes)
      if (dot(p.n, v) > p.c + feas_tol) return std::nullopt;
  try {
    return canonicalize(std::move(verts));
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<ConvexPolygon> half_plane_intersection(
    std::vector<HalfPlane> planes) {
  // Normalize; a null normal is the whole plane (c >= 0) or empty (c < 0).
  std::vector<HalfPlane> ps;
  ps.reserve(planes.size());
  for (HalfPlane p : planes) {
    double len = norm(p.n);
    if (len < 1e-15) {
      if (p.c < 0.0) return std::nullopt;
      continue;
    }
    ps.push_back({(1.0 / len) * p.n, p.c / len});
  }
  if (ps.empty()) throw DegenerateInput("half_plane_intersection: unbounded");

  double S = 1e-30;
  for (const HalfPlane& p : ps) S = std::max(S, std::abs(p.c));

  // Near-parallel planes: keep the tighter offset.
  std::sort(ps.begin(), ps.end(), [](const HalfPlane& a, const HalfPlane& b) {
    return std::atan2(a.n.y, a.n.x) < std::atan2(b.n.y, b.n.x);
  });
  std::vector<HalfPlane> dedup;
  for (const HalfPlane& p : ps) {
    if (!dedup.empty() &&
        std::abs(std::atan2(p.n.y, p.n.x) -
                 std::atan2(dedup.back().n.y, dedup.back().n.x)) < 1e-10) {
      dedup.back().c = std::min(dedup.back().c, p.c);
      continue;
    }
    dedup.push_back(p);
  }
  if (dedup.size() >= 2) {
    double a0 = std::atan2(dedup.front().n.y, dedup.front().n.x);
    double a1 = std::atan2(dedup.back().n.y, dedup.back().n.x);
    if (a0 + kTwoPi - a1 < 1e-10) {
      dedup.front().c = std::min(dedup.front().c, dedup.back().c);
      dedup.pop_back();
    }
  }

  // Opposite-normal pairs decide feasibility outright.
  for (std::size_t i = 0; i < dedup.size(); ++i)
    for (std::size_t j = i + 1; j < dedup.size(); ++j)
      if (dot(dedup[i].n, dedup[j].n) < -1.0 + 1e-12 &&
          dedup[i].c + dedup[j].c < -1e-12 * S)
        return std::nullopt;

  // Bounded iff the normals leave no angular gap of pi or more.
  std::vector<double> angles;
  angles.reserve(dedup.size());
  for (const HalfPlane& p : dedup) angles.push_back(std::atan2(p.n.y, p.n.x));
  double max_gap = angles.front() + kTwoPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i)
    max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
  if (max_gap > kPi - 1e-12)
    throw DegenerateInput("half_plane_intersection: unbounded");

  // Clip a large start box, then recompute surviving vertices exactly from
  // their defining planes (box coordinates are too coarse to keep).
  const double R = 1e7 * (S + 1.0);
  std::vector<Vec2> verts{{-R, -R}, {R, -R}, {R, R}, {-R, R}};
  std::vector<int> ids{-1, -2, -3, -4};
  for (std::size_t k = 0; k < dedup.size(); ++k) {
    clip_tracked(verts, ids, dedup[k].n, dedup[k].c, static_cast<int>(k));
    if (verts.size() < 3) return std::nullopt;
  }
  const std::size_t m = verts.size();
  std::vector<Vec2> exact = verts;
  for (std::size_t i = 0; i < m; ++i) {
    int e_in = ids[(i + m - 1) % m], e_out = ids[i];
    if (e_in < 0 || e_out < 0 || e_in == e_out) continue;
    const HalfPlane &p = dedup[e_in], &q = dedup[e_out];
    double det = cross(p.n, q.n);
    if (std::abs(det) < 1e-13) continue;
    exact[i] = {(p.c * q.n.y - q.c * p.n.y) / det,
                (p.n.x * q.c - q.n.x * p.c) / det};
  }
  return finish(std::move(exact), dedup, 1e-9 * S);
}

std::optional<ConvexPolygon> inner_parallel(const ConvexPolygon& poly,
                                            double t) {
  if (t < 0.0) throw NegativeOffset("inner_parallel: offset must be >= 0");
  if (t == 0.0) return poly;
  std::vector<HalfPlane> planes = poly.edge_half_planes();
  for (HalfPlane& p : planes) p.c -= t;
  std::vector<Vec2> verts = poly.vertices();
  for (const HalfPlane& p : planes) {
    verts = clip(verts, p.n, p.c);
    if (verts.size() < 3) return std::nullopt;
  }
  return finish(std::move(verts), planes, 1e-9 * poly.bbox_diagonal());
}

Inradius inradius_center(const ConvexPolygon& poly) {
  const double w = poly.minimal_width().width;
  double lo = 0.0, hi = 0.51 * w;  // r(K) <= w/2, so hi is infeasible
  for (int it = 0; it < 80 && hi - lo > 1e-13 * w; ++it) {
    double mid = 0.5 * (lo + hi);
    if (inner_parallel(poly, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  for (double f : {1e-9, 1e-7, 1e-5, 5e-2}) {
    if (auto ip = inner_parallel(poly, r * (1.0 - f)))
      return {r, ip->vertex_centroid()};
  }
  return {r, poly.centroid()};  // unreachable for a canonical polygon
}

}  // namespace cheeger2d
