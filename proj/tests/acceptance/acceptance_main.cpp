// End-to-end acceptance gate: eight numbered checks, one pass/fail line
// each, nonzero exit if any fails.  Tolerances are pinned in the line text
// so a log is self-describing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "cheeger2d/asymmetry.hpp"
#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/families.hpp"
#include "cheeger2d/hausdorff.hpp"
#include "cheeger2d/inner_parallel.hpp"
#include "cheeger2d/search.hpp"
#include "cheeger2d/verify.hpp"

using namespace cheeger2d;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

struct Criterion {
  int id;
  std::string title;
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// ---------------------------------------------------------------- 1 -------
Criterion equilateral_benchmark() {
  Criterion c{1,
              "equilateral width-1 triangle: h = 3+sqrt(pi*sqrt(3)) "
              "within 1e-9, under 10 ms"};
  auto tri = make_equilateral({1.0, {0, 0}, 0.0});
  cheeger(tri);  // warm caches before timing
  auto t0 = clk::now();
  auto res = cheeger(tri);
  auto t1 = clk::now();
  double err = std::fabs(res.h - equilateral_wh());
  c.require(err <= 1e-9, "|h - bound| = " + std::to_string(err));
  c.require(seconds(t0, t1) < 0.010,
            "took " + std::to_string(seconds(t0, t1) * 1e3) + " ms");
  return c;
}

// ---------------------------------------------------------------- 2 -------
Criterion rectangle_closed_forms() {
  Criterion c{2,
              "square h = 2+sqrt(pi) within 1e-9; rectangle family matches "
              "its quadratic root within 1e-10, h decreasing toward 2, "
              "w*h > 2"};
  double h_sq = cheeger(rect_RL(1.0)).h;
  c.require(std::fabs(h_sq - (2.0 + std::sqrt(kPi))) <= 1e-9,
            "square h off by " +
                std::to_string(std::fabs(h_sq - (2.0 + std::sqrt(kPi)))));
  double prev = h_sq;
  for (double L = 2.0; L <= 512.0; L *= 2.0) {
    auto s = cheeger_scalars(rect_RL(L));
    double ref = 1.0 / rect_RL_root(L);
    c.require(std::fabs(s.h - ref) <= 1e-10,
              "L=" + std::to_string(L) + " |h-root| = " +
                  std::to_string(std::fabs(s.h - ref)));
    c.require(s.h < prev, "h not decreasing at L=" + std::to_string(L));
    c.require(s.wh > 2.0, "w*h not above 2 at L=" + std::to_string(L));
    prev = s.h;
  }
  c.require(prev < 2.01, "h(512 x 1) not close to 2");
  return c;
}

// ------------------------------------------------------------- 3 & 6 ------
Criterion corpus_inequalities(CorpusReport& out) {
  Criterion c{3,
              "10000 random polygons (<= 12 vertices, seed 42): every "
              "inequality margin >= -1e-9, under 120 s"};
  auto t0 = clk::now();
  out = verify_corpus(10000, 42);
  auto t1 = clk::now();
  c.require(out.violations.empty(),
            std::to_string(out.violations.size()) + " violations");
  const double m = -1e-9;
  c.require(out.min_margin_main >= m, "main margin");
  c.require(out.min_margin_lower >= m, "lower margin");
  c.require(out.min_margin_ftouhi >= m, "inradius-area margin");
  c.require(out.min_margin_pal_width >= m, "width-inradius margin");
  c.require(out.min_margin_pal_area >= m, "width-area margin");
  c.require(out.min_margin_width_lemma >= m, "width lemma grid margin");
  c.require(out.min_margin_area_comparison >= m, "area comparison margin");
  c.require(seconds(t0, t1) < 120.0,
            "took " + std::to_string(seconds(t0, t1)) + " s");
  return c;
}

// ---------------------------------------------------------------- 4 -------
Criterion width_lemma_equality() {
  Criterion c{4,
              "equilateral inner sets: |w(K_t) - (w - 3t)| <= 1e-10 w on a "
              "64-point offset grid"};
  for (const EquilateralPose pose : {EquilateralPose{1.0, {0, 0}, 0.0},
                                     EquilateralPose{2.3, {1.2, -0.4}, 0.7},
                                     EquilateralPose{0.5, {-3, 2}, 2.0}}) {
    auto tri = make_equilateral(pose);
    double w = tri.minimal_width().width;
    double r = w / 3.0;
    for (int j = 0; j < 64; ++j) {
      double t = r * (j + 1) / 65.0;
      auto inner = inner_parallel(tri, t);
      if (!inner) {
        c.require(false, "inner set vanished early");
        break;
      }
      double err = std::fabs(inner->minimal_width().width - (w - 3.0 * t));
      c.require(err <= 1e-10 * w,
                "pose w=" + std::to_string(pose.width) + " err " +
                    std::to_string(err));
    }
  }
  return c;
}

// ---------------------------------------------------------------- 5 -------
Criterion sharpness_family() {
  Criterion c{5,
              "clipped-triangle family, eps = 2^-3..2^-10: deficit = "
              "eps*h(T0) rel 1e-9, d_H = eps/sqrt(3) abs 1e-10, alpha = "
              "eps/(sqrt(3)(sqrt(3)-eps)) rel 1e-6, ratio -> "
              "1/(sqrt(3)(3+sqrt(pi*sqrt(3)))) within 1e-3, tail slopes "
              "1 +- 1e-3"};
  std::vector<double> eps;
  for (int k = 3; k <= 10; ++k) eps.push_back(std::ldexp(1.0, -k));
  auto recs = sweep_sharpness(eps);
  std::vector<double> deltas, alphas;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& e = recs[i].entries;
    double delta = e[0].measured, alpha = e[1].measured, dh = e[2].measured;
    deltas.push_back(delta);
    alphas.push_back(alpha);
    double delta_rel = std::fabs(delta - *e[0].reference) / *e[0].reference;
    double alpha_rel = std::fabs(alpha - *e[1].reference) / *e[1].reference;
    double dh_abs = std::fabs(dh - *e[2].reference);
    c.require(delta_rel <= 1e-9, "deficit rel err " + std::to_string(delta_rel));
    c.require(dh_abs <= 1e-10, "d_H abs err " + std::to_string(dh_abs));
    c.require(alpha_rel <= 1e-6,
              "asymmetry rel err " + std::to_string(alpha_rel));
  }
  // Limit of alpha/delta as eps -> 0: 1/(sqrt(3) * (3 + sqrt(pi*sqrt(3)))).
  double limit = 1.0 / (kSqrt3 * equilateral_wh());
  double ratio_tail = recs.back().entries[3].measured;
  c.require(std::fabs(ratio_tail - limit) <= 1e-3,
            "ratio " + std::to_string(ratio_tail) + " vs limit " +
                std::to_string(limit));
  double slope_alpha = loglog_tail_slope(eps, alphas);
  double slope_delta = loglog_tail_slope(eps, deltas);
  c.require(std::fabs(slope_alpha - 1.0) <= 1e-3,
            "alpha slope " + std::to_string(slope_alpha));
  c.require(std::fabs(slope_delta - 1.0) <= 1e-3,
            "deficit slope " + std::to_string(slope_delta));
  return c;
}

// ---------------------------------------------------------------- 6 -------
Criterion cheeger_self_consistency(const CorpusReport& corpus) {
  Criterion c{6,
              "Cheeger sets reproduce h to 1e-9 over the corpus; 100 "
              "verified nested-profile pairs order their constants"};
  c.require(corpus.max_consistency_err <= 1e-9,
            "worst perimeter/area error " +
                std::to_string(corpus.max_consistency_err));
  int checked = 0;
  for (int s = 0; s < 100 && c.ok; ++s) {
    auto k = random_convex(3 + s % 10, 20000 + s);
    double r_k = inradius_center(k).r;
    ConvexPolygon h_body = k;  // replaced below
    if (s % 2 == 0) {
      double f = 0.5 + 0.45 * (s % 50) / 49.0;  // in [0.5, 0.95]
      h_body = k.scaled(f, k.centroid());
    } else {
      auto inner = inner_parallel(k, 0.3 * r_k);
      if (!inner) {
        c.require(false, "inner parallel pair vanished");
        break;
      }
      h_body = *inner;
    }
    // Verify the premises: containment and area-profile dominance on a
    // 256-point offset grid strictly inside the smaller inradius.
    double tol = 1e-12 * k.bbox_diagonal();
    bool nested = true;
    for (auto v : h_body.vertices()) nested = nested && k.contains(v, tol);
    c.require(nested, "pair not nested at seed " + std::to_string(s));
    double r_h = inradius_center(h_body).r;
    for (int j = 0; j < 256 && c.ok; ++j) {
      double t = r_h * j / 256.0;
      c.require(area_profile(h_body, t) <= area_profile(k, t) + 1e-12,
                "profile dominance failed at seed " + std::to_string(s));
    }
    // Conclusion: the smaller body has the strictly larger constant.
    c.require(cheeger(h_body).h > cheeger(k).h,
              "constant comparison failed at seed " + std::to_string(s));
    ++checked;
  }
  c.require(checked == 100 || !c.ok, "pair count");
  return c;
}

// ---------------------------------------------------------------- 7 -------
Criterion optimizer_recovery() {
  Criterion c{7,
              "hill climbing (3 vertices, 8 restarts, 20000 iterations, "
              "seed 42) reaches the bound within 1e-3 with asymmetry <= "
              "1e-2, never exceeding it, under 60 s"};
  SearchConfig cfg;
  cfg.n_vertices = 3;
  cfg.seed = 42;
  cfg.iters = 20000;
  cfg.restarts = 8;
  auto t0 = clk::now();
  auto res = maximize_wh(cfg);
  auto t1 = clk::now();
  double bound = equilateral_wh();
  c.require(res.best_value >= bound - 1e-3,
            "best " + std::to_string(res.best_value));
  c.require(res.asym_of_best <= 1e-2,
            "asymmetry " + std::to_string(res.asym_of_best));
  for (const auto& tp : res.trajectory)
    c.require(tp.value <= bound + 1e-9,
              "accepted value above the bound: " + std::to_string(tp.value));
  c.require(seconds(t0, t1) < 60.0,
            "took " + std::to_string(seconds(t0, t1)) + " s");
  return c;
}

// ---------------------------------------------------------------- 8 -------
Criterion property_suites() {
  Criterion c{8,
              "property suites, 200 seeded instances each: h scaling 1e-9, "
              "inclusion monotonicity, Hausdorff metric + brute force 1e-7, "
              "width 2-Lipschitz, deficit scale-invariant 1e-8, asymmetry "
              "scale-invariant 1e-6"};

  // h(tK) = h(K)/t.
  const double factors[3] = {0.1, 2.0, 37.0};
  for (int s = 0; s < 200 && c.ok; ++s) {
    auto k = random_convex(3 + s % 10, 30000 + s);
    double h = cheeger(k).h;
    double f = factors[s % 3];
    double hs = cheeger(k.scaled(f)).h;
    c.require(std::fabs(hs * f - h) <= 1e-9 * h,
              "scaling failed at seed " + std::to_string(s));
  }

  // H inside K implies h(H) >= h(K).
  for (int s = 0; s < 200 && c.ok; ++s) {
    auto k = random_convex(3 + s % 10, 40000 + s);
    double hk = cheeger(k).h;
    double hh;
    if (s % 2 == 0) {
      hh = cheeger(k.scaled(0.5 + 0.45 * (s % 40) / 39.0, k.centroid())).h;
    } else {
      auto inner = inner_parallel(k, 0.3 * inradius_center(k).r);
      if (!inner) {
        c.require(false, "monotonicity pair vanished");
        break;
      }
      hh = cheeger(*inner).h;
    }
    c.require(hh >= hk - 1e-9 * hk,
              "monotonicity failed at seed " + std::to_string(s));
  }

  // Hausdorff distance: metric behavior, brute-force agreement, and the
  // width's Lipschitz bound.
  for (int s = 0; s < 200 && c.ok; ++s) {
    auto a = random_convex(3 + s % 9, 50000 + s);
    auto b = random_convex(3 + (s + 4) % 9, 60000 + s);
    auto e = random_convex(3 + (s + 7) % 9, 70000 + s);
    double ab = hausdorff_distance(a, b);
    double ba = hausdorff_distance(b, a);
    double ae = hausdorff_distance(a, e);
    double be = hausdorff_distance(b, e);
    c.require(hausdorff_distance(a, a) == 0.0, "identity failed");
    c.require(ab == ba, "symmetry failed");
    c.require(ab > 0.0, "positivity failed");
    c.require(ae <= ab + be + 1e-12, "triangle inequality failed");
    double brute = 0.0;
    for (auto v : a.vertices()) brute = std::max(brute, b.distance_to(v));
    for (auto v : b.vertices()) brute = std::max(brute, a.distance_to(v));
    c.require(std::fabs(ab - brute) <= 1e-7, "brute-force agreement failed");
    double wa = a.minimal_width().width;
    double wb = b.minimal_width().width;
    c.require(std::fabs(wa - wb) <= 2.0 * ab + 1e-12,
              "width Lipschitz bound failed");
  }

  // Scale invariance of the deficit and of the asymmetry.
  const double scales[4] = {0.05, 0.5, 3.0, 41.0};
  for (int s = 0; s < 200 && c.ok; ++s) {
    auto k = random_convex(3 + s % 10, 80000 + s);
    double f = scales[s % 4];
    double d0 = deficit(k);
    double d1 = deficit(k.scaled(f));
    c.require(std::fabs(d1 - d0) <= 1e-8 * std::max(1.0, d0),
              "deficit scale invariance failed at seed " + std::to_string(s));
    double a0 = asymmetry(k).value;
    double a1 = asymmetry(k.scaled(f)).value;
    c.require(std::fabs(a1 - a0) <= 1e-6 * a0,
              "asymmetry scale invariance failed at seed " +
                  std::to_string(s));
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(equilateral_benchmark());
  results.push_back(rectangle_closed_forms());
  CorpusReport corpus;
  results.push_back(corpus_inequalities(corpus));
  results.push_back(width_lemma_equality());
  results.push_back(sharpness_family());
  results.push_back(cheeger_self_consistency(corpus));
  results.push_back(optimizer_recovery());
  results.push_back(property_suites());

  int failed = 0;
  for (const auto& c : results) {
    if (c.ok) {
      std::printf("[PASS] criterion %d: %s\n", c.id, c.title.c_str());
    } else {
      ++failed;
      std::printf("[FAIL] criterion %d: %s -- %s\n", c.id, c.title.c_str(),
                  c.detail.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed,
              results.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
