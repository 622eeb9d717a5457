#pragma once

// Slow reference implementations used only by the tests.  Each one
// deliberately avoids the algorithm the library uses: widths come from a
// dense direction scan instead of rotating calipers, Hausdorff distances
// from the farthest-vertex characterization instead of support-function
// arcs, rounded-polygon measures from an explicit hull of a fine disk
// polygon instead of the Steiner formulas, and asymmetry from a
// rotation/translation grid search instead of the LP-based Chebyshev fit.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cheeger2d/families.hpp"
#include "cheeger2d/hausdorff.hpp"
#include "cheeger2d/polygon.hpp"

namespace cheeger2d::oracles {

// Minimal width from a 4096-point scan of [0, pi) polished by golden-section
// search on the best bracket.  The bracket is two grid cells wide, narrow
// enough to contain at most one kink of the piecewise-sinusoidal width.
inline double min_width(const ConvexPolygon& poly) {
  const int kGrid = 4096;
  auto width_at = [&](double th) {
    return poly.directional_width({std::cos(th), std::sin(th)});
  };
  int best = 0;
  double best_w = width_at(0.0);
  for (int i = 1; i < kGrid; ++i) {
    double w = width_at(kPi * i / kGrid);
    if (w < best_w) {
      best_w = w;
      best = i;
    }
  }
  double lo = kPi * (best - 1) / kGrid;
  double hi = kPi * (best + 1) / kGrid;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - gr * (hi - lo);
  double b = lo + gr * (hi - lo);
  double fa = width_at(a);
  double fb = width_at(b);
  for (int it = 0; it < 100; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - gr * (hi - lo);
      fa = width_at(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + gr * (hi - lo);
      fb = width_at(b);
    }
  }
  return std::min({best_w, fa, fb});
}

// Diameter as the maximum over all vertex pairs.
inline double brute_diameter(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      d = std::max(d, dist(v[i], v[j]));
  return d;
}

// Hausdorff distance from the directed-distance form: the farthest point of
// one convex set from another is an extreme point, so a max over vertices of
// point-to-polygon distances is exact.
inline double brute_hausdorff(const ConvexPolygon& p, const ConvexPolygon& q) {
  double d = 0.0;
  for (auto v : p.vertices()) d = std::max(d, q.distance_to(v));
  for (auto v : q.vertices()) d = std::max(d, p.distance_to(v));
  return d;
}

struct HullMeasures {
  double area = 0.0;
  double perimeter = 0.0;
};

// Area and perimeter of polygon + r*disk via the hull of every vertex
// translated around an inscribed k-gon of the disk.  Slightly low (the k-gon
// is inscribed): relative error O(1/k^2).
inline HullMeasures rounded_measures(const ConvexPolygon& core, double r,
                                     int k = 4096) {
  std::vector<Vec2> pts;
  pts.reserve(core.size() * static_cast<std::size_t>(k));
  for (auto v : core.vertices())
    for (int j = 0; j < k; ++j) {
      double th = kTwoPi * j / k;
      pts.push_back(v + Vec2{r * std::cos(th), r * std::sin(th)});
    }
  auto hull = canonicalize(std::move(pts));
  return {hull.area(), hull.perimeter()};
}

// Equilateral asymmetry by brute force: rotations on a grid over the
// triangle's symmetry range [0, 2*pi/3), the translation at each rotation
// minimized by coordinate descent (the objective is convex in the center),
// and the best rotation polished on a finer local grid.
inline double grid_asymmetry(const ConvexPolygon& poly) {
  const double w = poly.minimal_width().width;
  const Vec2 c0 = poly.centroid();
  auto objective = [&](double rot, Vec2 c) {
    return hausdorff_distance(poly, make_equilateral({w, c, rot})) / w;
  };
  // Pattern search over the center.  Sixteen directions, not four: the
  // objective is a max of linear functions of the center, and axis-only
  // moves jam on its kinks.
  std::vector<Vec2> dirs;
  for (int i = 0; i < 16; ++i)
    dirs.push_back({std::cos(kTwoPi * i / 16.0), std::sin(kTwoPi * i / 16.0)});
  auto min_over_center = [&](double rot) {
    Vec2 c = c0;
    double f = objective(rot, c);
    double step = 0.25 * w;
    while (step > 1e-10 * w) {
      bool moved = false;
      for (Vec2 d : dirs) {
        double g = objective(rot, c + step * d);
        if (g < f) {
          f = g;
          c = c + step * d;
          moved = true;
          break;
        }
      }
      if (!moved) step *= 0.5;
    }
    return f;
  };
  const int kRot = 96;
  const double span = kTwoPi / 3.0;
  double best = min_over_center(0.0);
  double best_rot = 0.0;
  for (int i = 1; i < kRot; ++i) {
    double rot = span * i / kRot;
    double f = min_over_center(rot);
    if (f < best) {
      best = f;
      best_rot = rot;
    }
  }
  // Two refinement stages, each an 8x finer grid around the best rotation.
  double res = span / kRot;
  for (int stage = 0; stage < 2; ++stage) {
    res /= 8.0;
    double center = best_rot;
    for (int i = -8; i <= 8; ++i) {
      double rot = center + res * i;
      double f = min_over_center(rot);
      if (f < best) {
        best = f;
        best_rot = rot;
      }
    }
  }
  return best;
}

}  // namespace cheeger2d::oracles
