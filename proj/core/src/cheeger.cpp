#include "cheeger2d/cheeger.hpp"

#include <cmath>

#include "cheeger2d/errors.hpp"

namespace cheeger2d {

double area_profile(const ConvexPolygon& poly, double t) {
  if (t < 0.0) throw NegativeOffset("area_profile: offset must be >= 0");
  if (auto ip = inner_parallel(poly, t)) return ip->area();
  // Empty inner set: t is either at the inradius (area 0) or beyond (error).
  double r = inradius_center(poly).r;
  if (t > r + 1e-9 * poly.minimal_width().width)
    throw OffsetBeyondInradius("area_profile: offset exceeds the inradius");
  return 0.0;
}

CheegerResult cheeger(const ConvexPolygon& poly) {
  const double r_in = inradius_center(poly).r;
  // F(r) = |K_{-r}| - pi r^2 is strictly decreasing with F(0+) > 0 > F(r_in);
  // its unique root r* gives h = 1/r*.
  auto F = [&](double r) {
    auto ip = inner_parallel(poly, r);
    return (ip ? ip->area() : 0.0) - kPi * r * r;
  };
  double lo = 1e-9 * r_in, hi = (1.0 - 1e-9) * r_in;
  for (int it = 0; it < 80 && hi - lo > 1e-13 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (F(mid) > 0.0 ? lo : hi) = mid;
  }
  double r_star = 0.5 * (lo + hi);
  auto core = inner_parallel(poly, r_star);
  if (!core) {  // only possible within roundoff of the bracket edge
    r_star = lo;
    core = inner_parallel(poly, r_star);
  }
  double residual = core->area() - kPi * r_star * r_star;
  return {r_star, 1.0 / r_star, {std::move(*core), r_star}, residual};
}

ShapeScalars cheeger_scalars(const ConvexPolygon& poly) {
  ShapeScalars s;
  s.width = poly.minimal_width().width;
  s.inradius = inradius_center(poly).r;
  s.area = poly.area();
  s.perimeter = poly.perimeter();
  s.diameter = poly.diameter();
  s.h = cheeger(poly).h;
  s.wh = s.width * s.h;
  return s;
}

}  // namespace cheeger2d
