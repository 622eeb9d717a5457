#pragma once

#include <cstdint>
#include <random>

#include "cheeger2d/polygon.hpp"

namespace cheeger2d {

// An equilateral triangle described by pose: width (height of the triangle),
// center (area centroid), and rotation.  At rotation 0 the triangle has a
// horizontal bottom edge and apex pointing up (+y); rotation is taken
// modulo 2*pi/3, the triangle's symmetry.
struct EquilateralPose {
  double width = 1.0;
  Vec2 center;
  double rotation = 0.0;
};

ConvexPolygon make_equilateral(const EquilateralPose& pose);

// Reference triangle with vertices (-1,0), (1,0), (0,sqrt(3)); width sqrt(3).
ConvexPolygon family_T0();

// Shrunk copy (1 - eps/sqrt(3)) * T0: vertices (+-(1-eps/sqrt(3)), 0) and
// (0, sqrt(3)-eps); equilateral with width sqrt(3)-eps, contained in
// family_Reps(eps).  Requires 0 < eps < sqrt(3)/2.
ConvexPolygon family_Teps(double eps);

// T0 truncated by the horizontal cut {y <= sqrt(3)-eps}: vertices (-1,0),
// (1,0), (eps/sqrt(3), sqrt(3)-eps), (-eps/sqrt(3), sqrt(3)-eps).  Width
// sqrt(3)-eps.  Requires 0 < eps < sqrt(3)/2.
ConvexPolygon family_Reps(double eps);

// Axis-aligned rectangle [-L/2, L/2] x [0, 1] (aspect L x 1).  Requires
// L >= 1.
ConvexPolygon rect_RL(double L);

// Regular n-gon with minimal width w, centered at the origin with one edge
// normal pointing along -y.  Requires n >= 3, w > 0.
ConvexPolygon regular_ngon(int n, double w);

// Polygonal approximation of the Reuleaux triangle of width w: each of the
// three circular arcs is sampled at m points (m >= 2), endpoints shared.
// The true Reuleaux triangle is the intersection of three unit disks; its
// inscribed approximation here is convex with 3*(m-1) vertices.
ConvexPolygon reuleaux_polygon(int m, double w = 1.0);

// Random convex polygon with at most n vertices inside the unit square,
// via the uniform-increments construction (split random x/y coordinates into
// two chains, pair the increments, sort by angle).  Collinear draws can
// reduce the count below n.  Deterministic in seed.  Requires n >= 3.
ConvexPolygon random_convex(int n, std::uint64_t seed);

}  // namespace cheeger2d
