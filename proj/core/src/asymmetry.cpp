#include "cheeger2d/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cheeger2d/linprog.hpp"

namespace cheeger2d {

namespace {

double wrap_mod(double x, double m) {
  double t = std::fmod(x, m);
  if (t < 0.0) t += m;
  if (t >= m) t = 0.0;
  return t;
}

Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

struct InnerResult {
  double g = std::numeric_limits<double>::infinity();
  Vec2 c;
};

// At a fixed triangle rotation phi, the best translation solves
//   min_c max_theta |f(theta) - c.nu(theta)|,
// f(theta) = h_K(theta) - R max_k cos(theta - psi_k): a Chebyshev fit of f by
// its first circular harmonics.  Solved with cutting planes over a 3-variable
// LP (c_x, c_y, r); the max is evaluated exactly per arc, so the returned
// value is the true sup-distance for the returned center.
class InnerSolver {
 public:
  InnerSolver(const ConvexPolygon& K, double w)
      : K_(K), R_(2.0 * w / 3.0), B_(2.0 * (K.bbox_diagonal() + w)) {
    const auto& v = K.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      Vec2 e = K.vertex(i + 1) - v[i];
      normals_.push_back(wrap_angle(std::atan2(-e.x, e.y)));
    }
  }

  const std::vector<double>& polygon_normals() const { return normals_; }

  InnerResult solve(double phi) const {
    std::array<double, 3> psi;
    std::vector<double> brk = normals_;
    for (int k = 0; k < 3; ++k) {
      psi[k] = kPi / 2.0 + phi + kTwoPi * k / 3.0;
      brk.push_back(wrap_angle(psi[k] + kPi / 3.0));  // support switch angles
    }
    std::sort(brk.begin(), brk.end());

    auto tri = [&](double th) {
      double m = -2.0;
      for (double p : psi) m = std::max(m, std::cos(th - p));
      return R_ * m;
    };
    auto f = [&](double th) { return K_.support(unit(th)) - tri(th); };

    std::vector<LpCon3> cons;
    cons.reserve(2 * brk.size() + 96);
    auto add_cut = [&](double th) {
      double ft = f(th), ct = std::cos(th), st = std::sin(th);
      cons.push_back({{-ct, -st, -1.0}, -ft});
      cons.push_back({{ct, st, -1.0}, ft});
    };
    for (double th : brk) add_cut(th);
    for (int j = 0; j < 8; ++j) add_cut(j * kPi / 4.0 + 0.2617);

    const std::array<double, 3> lo{-B_, -B_, 0.0}, hi{B_, B_, 4.0 * B_};
    InnerResult best;
    for (int iter = 0; iter < 40; ++iter) {
      auto sol = lp3({0.0, 0.0, 1.0}, cons, lo, hi);
      Vec2 c = sol ? Vec2{(*sol)[0], (*sol)[1]} : Vec2{0.0, 0.0};
      auto [g, th_star] = exact_max(c, psi, brk);
      if (g < best.g) best = {g, c};
      if (!sol || g <= (*sol)[2] + 1e-12 * (1.0 + B_)) break;
      add_cut(th_star);
    }
    return best;
  }

 private:
  // Exact sup of |f(theta) - c.nu(theta)|: on each arc between consecutive
  // breakpoints both supports are fixed-vertex sinusoids, so the difference
  // is d.nu(theta) and peaks at arc endpoints or where nu aligns with +-d.
  std::pair<double, double> exact_max(Vec2 c, const std::array<double, 3>& psi,
                                      const std::vector<double>& brk) const {
    double best = -1.0, arg = 0.0;
    auto consider = [&](double val, double th) {
      if (val > best) {
        best = val;
        arg = th;
      }
    };
    const std::size_t m = brk.size();
    for (std::size_t i = 0; i < m; ++i) {
      double a = brk[i];
      double b = (i + 1 < m) ? brk[i + 1] : brk[0] + kTwoPi;
      {
        Vec2 u = unit(a);
        double tri = -2.0;
        for (double p : psi) tri = std::max(tri, std::cos(a - p));
        consider(std::abs(K_.support(u) - R_ * tri - dot(c, u)), a);
      }
      double len = b - a;
      if (len < 1e-15) continue;
      double mid = a + 0.5 * len;
      Vec2 u = unit(mid);
      int kbest = 0;
      for (int k = 1; k < 3; ++k)
        if (std::cos(mid - psi[k]) > std::cos(mid - psi[kbest])) kbest = k;
      Vec2 d = K_.support_point(u) - R_ * unit(psi[kbest]) - c;
      double align = std::atan2(d.y, d.x);
      for (double phi : {align, align + kPi}) {
        double off = wrap_angle(phi - a);
        if (off < len) consider(norm(d), a + off);
      }
    }
    return {best, arg};
  }

  const ConvexPolygon& K_;
  double R_;
  double B_;
  std::vector<double> normals_;
};

}  // namespace

AsymmetryResult asymmetry(const ConvexPolygon& poly) {
  const Vec2 cen = poly.centroid();
  const ConvexPolygon K = poly.translated(-cen);
  const double w = K.minimal_width().width;
  const InnerSolver solver(K, w);

  const double period = kTwoPi / 3.0;
  const int grid = 48;
  const double step = period / grid;

  struct Cand {
    double val;
    double phi;
    Vec2 c;
  };
  std::vector<Cand> evals;
  auto eval = [&](double phi) {
    InnerResult r = solver.solve(phi);
    evals.push_back({r.g, phi, r.c});
  };
  for (int k = 0; k < grid; ++k) eval(k * step);
  // A triangle edge aligned with a polygon edge is the natural optimum
  // candidate; seed those rotations exactly.
  for (double beta : solver.polygon_normals())
    eval(wrap_mod(beta + kPi / 2.0, period));

  std::sort(evals.begin(), evals.end(),
            [](const Cand& a, const Cand& b) { return a.val < b.val; });
  std::vector<Cand> picks;
  for (const Cand& e : evals) {
    bool near = false;
    for (const Cand& p : picks) {
      double d = std::abs(wrap_mod(e.phi, period) - wrap_mod(p.phi, period));
      d = std::min(d, period - d);
      if (d <= 1.01 * step) {
        near = true;
        break;
      }
    }
    if (!near) picks.push_back(e);
    if (picks.size() == 4) break;
  }

  Cand best = evals.front();
  auto consider = [&](const InnerResult& r, double phi) {
    if (r.g < best.val) best = {r.g, phi, r.c};
  };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (const Cand& p : picks) {
    double a = p.phi - step, b = p.phi + step;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    InnerResult r1 = solver.solve(x1), r2 = solver.solve(x2);
    consider(r1, x1);
    consider(r2, x2);
    for (int it = 0; it < 48; ++it) {
      if (r1.g <= r2.g) {
        b = x2;
        x2 = x1;
        r2 = r1;
        x1 = b - gr * (b - a);
        r1 = solver.solve(x1);
        consider(r1, x1);
      } else {
        a = x1;
        x1 = x2;
        r1 = r2;
        x2 = a + gr * (b - a);
        r2 = solver.solve(x2);
        consider(r2, x2);
      }
    }
  }

  EquilateralPose pose{w, best.c + cen, wrap_mod(best.phi, period)};
  return {best.val / w, pose};
}

}  // namespace cheeger2d
