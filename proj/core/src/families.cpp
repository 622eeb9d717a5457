#include "cheeger2d/families.hpp"

#include <algorithm>
#include <cmath>

#include "cheeger2d/errors.hpp"

namespace cheeger2d {

namespace {

Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace

ConvexPolygon make_equilateral(const EquilateralPose& pose) {
  if (!(pose.width > 0.0) || !std::isfinite(pose.width) ||
      !std::isfinite(pose.rotation))
    throw ParamOutOfRange("make_equilateral: width must be positive and finite");
  const double R = 2.0 * pose.width / 3.0;  // circumradius; width = (3/2) R
  std::vector<Vec2> v;
  for (int k = 0; k < 3; ++k)
    v.push_back(pose.center +
                R * unit(kPi / 2.0 + pose.rotation + kTwoPi * k / 3.0));
  return canonicalize(std::move(v));
}

ConvexPolygon family_T0() {
  return canonicalize({{-1.0, 0.0}, {1.0, 0.0}, {0.0, kSqrt3}});
}

ConvexPolygon family_Teps(double eps) {
  if (!(eps > 0.0) || !(eps < kSqrt3 / 2.0))
    throw ParamOutOfRange("family_Teps: eps must lie in (0, sqrt(3)/2)");
  const double s = 1.0 - eps / kSqrt3;
  return canonicalize({{-s, 0.0}, {s, 0.0}, {0.0, kSqrt3 - eps}});
}

ConvexPolygon family_Reps(double eps) {
  if (!(eps > 0.0) || !(eps < kSqrt3 / 2.0))
    throw ParamOutOfRange("family_Reps: eps must lie in (0, sqrt(3)/2)");
  const double xc = eps / kSqrt3, yc = kSqrt3 - eps;
  return canonicalize({{-1.0, 0.0}, {1.0, 0.0}, {xc, yc}, {-xc, yc}});
}

ConvexPolygon rect_RL(double L) {
  if (!(L >= 1.0) || !std::isfinite(L))
    throw ParamOutOfRange("rect_RL: aspect must be >= 1");
  return canonicalize(
      {{-L / 2.0, 0.0}, {L / 2.0, 0.0}, {L / 2.0, 1.0}, {-L / 2.0, 1.0}});
}

ConvexPolygon regular_ngon(int n, double w) {
  if (n < 3) throw ParamOutOfRange("regular_ngon: need n >= 3");
  if (!(w > 0.0)) throw ParamOutOfRange("regular_ngon: width must be positive");
  // Width is twice the apothem for even n, apothem + circumradius for odd n.
  const double cosn = std::cos(kPi / n);
  const double apothem = (n % 2 == 0) ? w / 2.0 : w / (1.0 + 1.0 / cosn);
  const double R = apothem / cosn;
  std::vector<Vec2> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k)
    v.push_back(R * unit(-kPi / 2.0 + kPi / n + kTwoPi * k / n));
  return canonicalize(std::move(v));
}

ConvexPolygon reuleaux_polygon(int m, double w) {
  if (m < 2) throw ParamOutOfRange("reuleaux_polygon: need m >= 2 samples per arc");
  if (!(w > 0.0)) throw ParamOutOfRange("reuleaux_polygon: width must be positive");
  // Corners of the Reuleaux triangle (equilateral with side w); each boundary
  // arc is centered at the opposite corner with radius w.
  const Vec2 A{-w / 2.0, 0.0}, B{w / 2.0, 0.0}, C{0.0, w * kSqrt3 / 2.0};
  std::vector<Vec2> pts;
  pts.reserve(3 * (m - 1));
  auto arc = [&](Vec2 center, Vec2 from, Vec2 to) {
    double a0 = std::atan2(from.y - center.y, from.x - center.x);
    double a1 = a0 + wrap_angle(std::atan2(to.y - center.y, to.x - center.x) - a0);
    for (int k = 0; k + 1 < m; ++k) {  // final endpoint opens the next arc
      double t = a0 + (a1 - a0) * k / (m - 1);
      pts.push_back(center + w * unit(t));
    }
  };
  arc(C, A, B);
  arc(A, B, C);
  arc(B, C, A);
  return canonicalize(std::move(pts));
}

ConvexPolygon random_convex(int n, std::uint64_t seed) {
  if (n < 3) throw ParamOutOfRange("random_convex: need n >= 3");
  std::mt19937_64 g(seed);
  auto u01 = [&] { return (g() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Valtr's construction: random x and y coordinates split into two
    // monotone chains whose increments, paired up and sorted by angle, are
    // the edge vectors of a convex polygon.
    std::vector<double> xs(n), ys(n);
    for (double& x : xs) x = u01();
    for (double& y : ys) y = u01();
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    auto increments = [&](const std::vector<double>& c) {
      std::vector<double> d;
      d.reserve(n);
      double last_top = c.front(), last_bot = c.front();
      for (int i = 1; i + 1 < n; ++i) {
        if (g() & 1u) {
          d.push_back(c[i] - last_top);
          last_top = c[i];
        } else {
          d.push_back(last_bot - c[i]);
          last_bot = c[i];
        }
      }
      d.push_back(c.back() - last_top);
      d.push_back(last_bot - c.back());
      return d;
    };
    std::vector<double> dx = increments(xs), dy = increments(ys);
    for (std::size_t i = dy.size(); i > 1; --i)
      std::swap(dy[i - 1], dy[g() % i]);
    std::vector<Vec2> edges(n);
    for (int i = 0; i < n; ++i) edges[i] = {dx[i], dy[i]};
    std::sort(edges.begin(), edges.end(), [](Vec2 a, Vec2 b) {
      return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    std::vector<Vec2> pts(n);
    Vec2 acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      pts[i] = acc;
      acc = acc + edges[i];
    }
    // The chain starts at the origin; translate it back into the box the
    // coordinates were drawn from so the polygon lies in the unit square.
    double min_x = pts[0].x, min_y = pts[0].y;
    for (const Vec2& p : pts) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
    }
    const Vec2 shift{xs.front() - min_x, ys.front() - min_y};
    for (Vec2& p : pts) p = p + shift;
    try {
      return canonicalize(std::move(pts));
    } catch (const DegenerateInput&) {
      continue;  // collinear draw; retry with fresh randomness
    }
  }
  throw DegenerateInput("random_convex: could not generate a polygon");
}

}  // namespace cheeger2d
