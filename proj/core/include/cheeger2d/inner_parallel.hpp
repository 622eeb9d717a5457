#pragma once

#include <optional>
#include <vector>

#include "cheeger2d/polygon.hpp"

namespace cheeger2d {

// Intersection of closed half-planes, or nullopt when the intersection has
// empty interior.  Throws DegenerateInput when the intersection is unbounded
// (fewer than three distinct normal directions spanning more than a
// half-circle).
std::optional<ConvexPolygon> half_plane_intersection(
    std::vector<HalfPlane> planes);

// Inner parallel set K_{-t} = {p in K : dist(p, boundary) >= t}.  Returns
// nullopt when t meets or exceeds the inradius.  Throws NegativeOffset for
// t < 0.
std::optional<ConvexPolygon> inner_parallel(const ConvexPolygon& poly,
                                            double t);

struct Inradius {
  double r = 0.0;
  Vec2 center;
};

// Largest inscribed disk: radius by bisection on inner-set nonemptiness,
// center from the (tiny) inner set just below that radius.
Inradius inradius_center(const ConvexPolygon& poly);

}  // namespace cheeger2d
