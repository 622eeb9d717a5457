#pragma once

#include <optional>
#include <vector>

#include "cheeger2d/vec2.hpp"

namespace cheeger2d {

// Relative tolerances used when canonicalizing vertex lists.  Both scale with
// the bounding-box diagonal of the input (squared for the cross products).
inline constexpr double kCrossTol = 1e-12;
inline constexpr double kMergeTol = 1e-12;

class ConvexPolygon;

// Builds a convex polygon from an arbitrary point cloud: convex hull,
// duplicate/collinear removal, counterclockwise order, lexicographically
// smallest vertex first.  Throws DegenerateInput if the hull has fewer than
// three vertices or (numerically) zero area.  Idempotent: canonicalizing the
// vertices of a canonical polygon reproduces them bit for bit.
ConvexPolygon canonicalize(std::vector<Vec2> points);

struct WidthResult {
  double width = 0.0;
  Direction direction;  // outward normal of an edge attaining the width
};

// Closed half-plane {p : dot(n, p) <= c} with unit normal n.
struct HalfPlane {
  Vec2 n;
  double c = 0.0;
};

// Strictly convex polygon, vertices in counterclockwise order starting from
// the lexicographically smallest (x, then y).  Instances are immutable and
// only produced through canonicalize() or functions built on it.
class ConvexPolygon {
 public:
  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  Vec2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

  double area() const;
  double perimeter() const;
  double diameter() const;
  Vec2 centroid() const;        // area centroid
  Vec2 vertex_centroid() const; // mean of the vertices

  // Support function h(u) = max_p dot(u, p) and a maximizing vertex.
  double support(Vec2 u) const;
  Vec2 support_point(Vec2 u) const;

  // Width in a given direction: h(u) + h(-u) for unit u.
  double directional_width(Vec2 u) const;

  // Minimal width over all directions (rotating calipers).
  WidthResult minimal_width() const;

  bool contains(Vec2 p, double tol = 0.0) const;
  // Distance from an interior point to the boundary (min over edges);
  // negative if p is outside.
  double distance_to_boundary(Vec2 p) const;
  // Euclidean distance from p to the polygon (0 if inside).
  double distance_to(Vec2 p) const;

  ConvexPolygon translated(Vec2 d) const;
  ConvexPolygon scaled(double s, Vec2 about = {0.0, 0.0}) const;
  ConvexPolygon rotated(double angle, Vec2 about = {0.0, 0.0}) const;

  // One half-plane per edge, unit outward normals, in edge order.
  std::vector<HalfPlane> edge_half_planes() const;

  // Length of the bounding-box diagonal: cheap O(n) stand-in for the diameter
  // (within a factor sqrt(2) of it), used to scale tolerances.
  double bbox_diagonal() const;

 private:
  friend ConvexPolygon canonicalize(std::vector<Vec2> points);
  explicit ConvexPolygon(std::vector<Vec2> verts) : verts_(std::move(verts)) {}

  std::vector<Vec2> verts_;
};

// Minkowski sum of a convex polygon with a closed disk of radius r >= 0:
// straight edges parallel to the core's edges plus circular fillets at the
// vertices.  Area and perimeter follow the Steiner formulas.
struct RoundedPolygon {
  ConvexPolygon core;
  double radius = 0.0;

  double area() const;
  double perimeter() const;
};

RoundedPolygon minkowski_disk(const ConvexPolygon& core, double radius);

}  // namespace cheeger2d
