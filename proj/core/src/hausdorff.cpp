#include "cheeger2d/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cheeger2d {

namespace {

void collect_normal_angles(const ConvexPolygon& p, std::vector<double>& out) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 e = p.vertex(i + 1) - v[i];
    out.push_back(wrap_angle(std::atan2(-e.x, e.y)));
  }
}

}  // namespace

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Between consecutive edge-normal angles of the two polygons, both support
  // functions are single sinusoids attained at fixed vertices, so their
  // difference d.nu(theta) is maximized at arc endpoints or where nu aligns
  // with +-d (value |d|).
  std::vector<double> brk;
  collect_normal_angles(p, brk);
  collect_normal_angles(q, brk);
  std::sort(brk.begin(), brk.end());

  double best = 0.0;
  auto eval_at = [&](double theta) {
    Vec2 u{std::cos(theta), std::sin(theta)};
    best = std::max(best, std::abs(p.support(u) - q.support(u)));
  };

  const std::size_t m = brk.size();
  for (std::size_t i = 0; i < m; ++i) {
    double a = brk[i];
    double b = (i + 1 < m) ? brk[i + 1] : brk[0] + kTwoPi;
    eval_at(a);
    double len = b - a;
    if (len < 1e-15) continue;
    double mid = a + 0.5 * len;
    Vec2 u{std::cos(mid), std::sin(mid)};
    Vec2 d = p.support_point(u) - q.support_point(u);
    double align = std::atan2(d.y, d.x);
    for (double phi : {align, align + kPi}) {
      double off = wrap_angle(phi - a);
      if (off < len) best = std::max(best, norm(d));
    }
  }
  return best;
}

}  // namespace cheeger2d
