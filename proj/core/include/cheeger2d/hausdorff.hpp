#pragma once

#include "cheeger2d/polygon.hpp"

namespace cheeger2d {

// Hausdorff distance between two convex polygons, computed as the sup-norm
// distance between their support functions over the circle.  Exact up to
// roundoff (the circle is split into arcs on which the difference of support
// functions is a single sinusoid) and symmetric in its arguments by
// construction.
double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace cheeger2d
