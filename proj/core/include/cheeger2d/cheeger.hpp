#pragma once

#include "cheeger2d/inner_parallel.hpp"
#include "cheeger2d/polygon.hpp"

namespace cheeger2d {

// Area of the inner parallel set |K_{-t}| for t in [0, r(K)].  At t == r(K)
// the set has collapsed to (near) a point and the area is ~0.  Throws
// NegativeOffset for t < 0 and OffsetBeyondInradius for t > r(K).
double area_profile(const ConvexPolygon& poly, double t);

struct CheegerResult {
  double r_star = 0.0;       // maximizer radius: |K_{-r}| = pi r^2
  double h = 0.0;            // Cheeger constant, 1 / r_star
  RoundedPolygon cheeger_set;  // K_{-r*} fattened back by r*
  double residual = 0.0;     // |K_{-r*}| - pi r*^2 at the returned root
};

// Cheeger constant of a convex polygon via the inner-set characterization:
// the unique r in (0, r(K)) with |K_{-r}| = pi r^2 gives h(K) = 1/r, and the
// Cheeger set is the Minkowski sum K_{-r} + r B.
CheegerResult cheeger(const ConvexPolygon& poly);

struct ShapeScalars {
  double width = 0.0;      // minimal width w(K)
  double inradius = 0.0;   // r(K)
  double area = 0.0;
  double perimeter = 0.0;
  double diameter = 0.0;
  double h = 0.0;          // Cheeger constant
  double wh = 0.0;         // the product w(K) h(K)
};

ShapeScalars cheeger_scalars(const ConvexPolygon& poly);

}  // namespace cheeger2d
