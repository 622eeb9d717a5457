#include "cheeger2d/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheeger2d/errors.hpp"

namespace cheeger2d {

namespace {

bool lex_less(Vec2 a, Vec2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

double bbox_diag(const std::vector<Vec2>& pts) {
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (Vec2 p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

// Anchored at v[0] so every term is a product of coordinate differences;
// the plain formula loses the area of small polygons far from the origin
// to cancellation (terms ~|v|^2 vs area ~diam^2).
double shoelace_twice(const std::vector<Vec2>& v) {
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    s += cross(v[i] - v[0], v[i + 1] - v[0]);
  return s;
}

// Squared-distance from p to segment [a, b].
double seg_dist(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double t = dot(p - a, ab) / std::max(norm2(ab), 1e-300);
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace

ConvexPolygon canonicalize(std::vector<Vec2> pts) {
  if (pts.size() < 3) throw DegenerateInput("canonicalize: need at least 3 points");
  for (Vec2 p : pts)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw DegenerateInput("canonicalize: non-finite coordinate");
  const double scale = bbox_diag(pts);
  if (!(scale > 0.0)) throw DegenerateInput("canonicalize: all points coincide");
  const double ctol = kCrossTol * scale * scale;
  const double mtol = kMergeTol * scale;

  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) throw DegenerateInput("canonicalize: fewer than 3 distinct points");

  // Andrew monotone chain, keeping only strict left turns.
  std::vector<Vec2> hull;
  hull.reserve(pts.size() + 1);
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 1] - hull[hull.size() - 2],
                   *it - hull[hull.size() - 1]) <= ctol)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();  // endpoint is re-added by the other chain
  };
  build(pts.begin(), pts.end());
  build(pts.rbegin(), pts.rend());
  if (hull.size() < 3) throw DegenerateInput("canonicalize: hull is degenerate");

  // Cleanup to a fixed point: merge near-duplicate neighbors, drop
  // non-strict turns (both cyclic).
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Vec2> merged;
    merged.reserve(hull.size());
    for (Vec2 v : hull) {
      if (!merged.empty() && dist(v, merged.back()) < mtol) {
        changed = true;
        continue;
      }
      merged.push_back(v);
    }
    while (merged.size() >= 2 && dist(merged.front(), merged.back()) < mtol) {
      merged.pop_back();
      changed = true;
    }
    if (merged.size() < 3) throw DegenerateInput("canonicalize: collapsed below 3 vertices");

    std::vector<Vec2> strict;
    strict.reserve(merged.size());
    const std::size_t m = merged.size();
    for (std::size_t i = 0; i < m; ++i) {
      Vec2 a = merged[(i + m - 1) % m], b = merged[i], c = merged[(i + 1) % m];
      if (cross(b - a, c - b) <= ctol) {
        changed = true;
        continue;
      }
      strict.push_back(b);
    }
    if (strict.size() < 3) throw DegenerateInput("canonicalize: collapsed below 3 vertices");
    hull = std::move(strict);
  }

  if (shoelace_twice(hull) * 0.5 <= 1e-12 * scale * scale)
    throw DegenerateInput("canonicalize: area below tolerance");

  auto start = std::min_element(hull.begin(), hull.end(), lex_less);
  std::rotate(hull.begin(), start, hull.end());
  return ConvexPolygon(std::move(hull));
}

double ConvexPolygon::area() const { return 0.5 * shoelace_twice(verts_); }

double ConvexPolygon::perimeter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    s += dist(verts_[i], vertex(i + 1));
  return s;
}

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = i + 1; j < verts_.size(); ++j)
      best = std::max(best, dist(verts_[i], verts_[j]));
  return best;
}

Vec2 ConvexPolygon::centroid() const {
  // Anchored at verts_[0] for the same reason as the area computation.
  double a2 = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::size_t i = 1; i + 1 < verts_.size(); ++i) {
    Vec2 p = verts_[i] - verts_[0], q = verts_[i + 1] - verts_[0];
    double w = cross(p, q);
    a2 += w;
    c = c + w * (p + q);
  }
  return verts_[0] + (1.0 / (3.0 * a2)) * c;
}

Vec2 ConvexPolygon::vertex_centroid() const {
  Vec2 c{0.0, 0.0};
  for (Vec2 v : verts_) c = c + v;
  return (1.0 / static_cast<double>(verts_.size())) * c;
}

double ConvexPolygon::support(Vec2 u) const {
  double best = -std::numeric_limits<double>::infinity();
  for (Vec2 v : verts_) best = std::max(best, dot(u, v));
  return best;
}

Vec2 ConvexPolygon::support_point(Vec2 u) const {
  Vec2 arg = verts_[0];
  double best = dot(u, arg);
  for (Vec2 v : verts_) {
    double d = dot(u, v);
    if (d > best) {
      best = d;
      arg = v;
    }
  }
  return arg;
}

double ConvexPolygon::directional_width(Vec2 u) const {
  return support(u) + support(-u);
}

WidthResult ConvexPolygon::minimal_width() const {
  const std::size_t n = verts_.size();
  // Farthest vertex from edge 0, then advance it monotonically (antipodal
  // sweep): the farthest vertex index only moves forward as the edge does.
  auto height = [&](std::size_t i, std::size_t k) {
    return cross(vertex(i + 1) - verts_[i], vertex(k) - verts_[i]);
  };
  std::size_t j = 0;
  double hbest = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    double h = height(0, k);
    if (h > hbest) {
      hbest = h;
      j = k;
    }
  }
  double best = std::numeric_limits<double>::infinity();
  Direction dir;
  std::size_t budget = 2 * n + 8;
  for (std::size_t i = 0; i < n; ++i) {
    while (budget > 0 && height(i, j + 1) > height(i, j)) {
      j = (j + 1) % n;
      --budget;
    }
    Vec2 e = vertex(i + 1) - verts_[i];
    double d = height(i, j) / norm(e);
    if (d < best) {
      best = d;
      dir = Direction(std::atan2(-e.x, e.y));  // outward normal (e.y, -e.x)
    }
  }
  return {best, dir};
}

double ConvexPolygon::distance_to_boundary(Vec2 p) const {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    Vec2 e = vertex(i + 1) - verts_[i];
    d = std::min(d, cross(e, p - verts_[i]) / norm(e));
  }
  return d;
}

bool ConvexPolygon::contains(Vec2 p, double tol) const {
  return distance_to_boundary(p) >= -tol;
}

double ConvexPolygon::distance_to(Vec2 p) const {
  if (distance_to_boundary(p) >= 0.0) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i)
    d = std::min(d, seg_dist(p, verts_[i], vertex(i + 1)));
  return d;
}

ConvexPolygon ConvexPolygon::translated(Vec2 d) const {
  std::vector<Vec2> out = verts_;
  for (Vec2& v : out) v = v + d;
  return ConvexPolygon(std::move(out));  // order and start index are preserved
}

ConvexPolygon ConvexPolygon::scaled(double s, Vec2 about) const {
  if (!(s > 0.0)) throw ParamOutOfRange("scaled: factor must be positive");
  std::vector<Vec2> out = verts_;
  for (Vec2& v : out) v = about + s * (v - about);
  return ConvexPolygon(std::move(out));  // positive scaling preserves order
}

ConvexPolygon ConvexPolygon::rotated(double angle, Vec2 about) const {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<Vec2> out = verts_;
  for (Vec2& v : out) {
    Vec2 d = v - about;
    v = about + Vec2{c * d.x - s * d.y, s * d.x + c * d.y};
  }
  return canonicalize(std::move(out));  // start vertex may change
}

std::vector<HalfPlane> ConvexPolygon::edge_half_planes() const {
  std::vector<HalfPlane> planes;
  planes.reserve(verts_.size());
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    Vec2 e = vertex(i + 1) - verts_[i];
    Vec2 n = (1.0 / norm(e)) * Vec2{e.y, -e.x};
    planes.push_back({n, dot(n, verts_[i])});
  }
  return planes;
}

double ConvexPolygon::bbox_diagonal() const { return bbox_diag(verts_); }

double RoundedPolygon::area() const {
  return core.area() + core.perimeter() * radius + kPi * radius * radius;
}

double RoundedPolygon::perimeter() const {
  return core.perimeter() + kTwoPi * radius;
}

RoundedPolygon minkowski_disk(const ConvexPolygon& core, double radius) {
  if (radius < 0.0) throw NegativeOffset("minkowski_disk: radius must be >= 0");
  return {core, radius};
}

}  // namespace cheeger2d
