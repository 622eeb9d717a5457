#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cheeger2d/asymmetry.hpp"
#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/families.hpp"

namespace cheeger2d {

// The sharp bound: w(T)h(T) = 3 + sqrt(pi*sqrt(3)) for equilateral T.
double equilateral_wh();

// Supremum of the deficit over all convex bodies: 1 + 3^(1/4) pi^(1/2),
// approached by long thin rectangles (wh decreasing to 2).
double deficit_sup();

// Deficit of the reverse width-Cheeger inequality:
// (3 + sqrt(pi*sqrt(3))) - w(K) h(K).  Nonnegative, zero exactly for
// equilateral triangles.
double deficit(const ConvexPolygon& poly);
double deficit_from_wh(double wh);

// Inequality margins, each RHS - LHS in scale-invariant form (widths divided
// by w, areas by w^2), so a single absolute tolerance is meaningful across
// shapes.  A correct implementation never returns less than -1e-9.

// wh <= 3 + sqrt(pi*sqrt(3)).
double check_main(const ShapeScalars& s);
double check_main(const ConvexPolygon& poly);
// wh > 2.
double check_lower(const ShapeScalars& s);
double check_lower(const ConvexPolygon& poly);
// h <= 1/r + sqrt(pi/area).
double check_ftouhi(const ShapeScalars& s);
double check_ftouhi(const ConvexPolygon& poly);

struct PalMargins {
  double width_margin = 0.0;  // (3r - w)/w          from w <= 3r
  double area_margin = 0.0;   // (sqrt(3)A - w^2)/w^2 from w^2 <= sqrt(3)A
};
PalMargins check_pal(const ShapeScalars& s);
PalMargins check_pal(const ConvexPolygon& poly);

// w(K_{-t}) >= w(K) - 3t, margin (w(K_{-t}) - (w - 3t))/w.  Requires
// 0 <= t < r(K).
double check_width_lemma(const ConvexPolygon& poly, double t);

// |K_{-t}| >= |T_{-t}| where T is the equilateral triangle with w(T) = w(K),
// margin (|K_{-t}| - |T_{-t}|)/w^2 with |T_{-t}| = (w-3t)^2/sqrt(3) for
// t < w/3 and 0 beyond.  Requires 0 <= t < r(K).
double check_area_comparison(const ConvexPolygon& poly, double t);

// Local stability: alpha_E(K) <= C(eta, c2) * deficit(K) for shapes with
// deficit(K) <= eta, where C = 2 sqrt(pi sqrt(3)) /
// (c2 sqrt(3) (sqrt(pi sqrt(3)) - eta)^2).  c2 is an external normalization
// the caller supplies; the inequality is reported, and only the exact family
// formulas are asserted by the test suite.
struct StabilityParams {
  double eta = 0.0;
  double c2 = 1.0;
  double C = 0.0;  // derived from eta and c2
};

// Validates eta in (0, sqrt(pi*sqrt(3))) and c2 > 0, computes C.
StabilityParams stability_constant(double eta, double c2);

// Default normalization c2 = 25 sqrt(5), chosen so that
// C(sqrt(pi*sqrt(3))/2, default_c2()) equals remark_constant() exactly.
double default_c2();

// The admissible constant quoted for eta <= sqrt(pi*sqrt(3))/2:
// 8 * 3^(1/4) / (75 sqrt(5 pi)).
double remark_constant();

// Margin C*deficit - asymmetry; nullopt when deficit(P) > eta (the bound is
// only claimed near the equality case).
std::optional<double> stability_check(const ConvexPolygon& poly,
                                      const StabilityParams& params);

// Exact Cheeger radius for the rectangle rect_RL(L) (L x 1): the root of
// (4-pi) t^2 - 2(L+1) t + L = 0 in (0, 1/2), written in a cancellation-free
// form; h = 1/t.  L = 1 gives 1/(2+sqrt(pi)).
double rect_RL_root(double L);

struct SweepEntry {
  std::string name;
  double measured = 0.0;
  std::optional<double> reference;  // closed-form value when one exists
};

struct SweepRecord {
  double param = 0.0;  // eps or L
  std::vector<SweepEntry> entries;
  // Max relative error over entries that carry a reference.
  double rel_err() const;
};

// Clipped-triangle family R_eps: per eps, measured deficit, asymmetry,
// d_H(R_eps, T_eps), ratio asymmetry/deficit, and h(R_eps), against the
// closed forms eps*h(T0), eps/(sqrt(3)(sqrt(3)-eps)), eps/sqrt(3), (none),
// h(T0).  The d_H and asymmetry values are forced by a diameter comparison:
// diam(R_eps) = 2 while any equilateral triangle of width sqrt(3)-eps has
// diameter 2 - 2 eps/sqrt(3), so d_H >= eps/sqrt(3); T_eps attains it (its
// base corners sit at exactly that distance, the clipped top corners closer,
// at eps/2).  Requires each eps in (0, 1/2].
std::vector<SweepRecord> sweep_sharpness(std::span<const double> eps_list);

// Rectangle family: per L, measured h(R_L) and w*h against the closed-form
// root.  Requires each L >= 1.
std::vector<SweepRecord> sweep_rectangles(std::span<const double> L_list);

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);
// Slope through the last two points only (the asymptotic end of a sweep).
double loglog_tail_slope(std::span<const double> x, std::span<const double> y);

struct ShapeReport {
  ShapeScalars scalars;
  double deficit = 0.0;
  std::optional<double> asymmetry_value;
  std::optional<EquilateralPose> asymmetry_pose;
  // Named inequality margins; grid entries are minima over an 8-point t-grid.
  std::vector<std::pair<std::string, double>> margins;
  std::optional<double> stability_margin;  // only when params given and applicable
};

ShapeReport build_report(const ConvexPolygon& poly, bool with_asymmetry,
                         const std::optional<StabilityParams>& params = {});

struct CorpusRow {
  std::uint64_t index = 0;
  int n = 0;  // vertex count of the generated shape
  ShapeScalars scalars;
  double deficit = 0.0;
  double margin_main = 0.0;
  double margin_lower = 0.0;
  double margin_ftouhi = 0.0;
  double margin_pal_width = 0.0;
  double margin_pal_area = 0.0;
  double margin_width_lemma = 0.0;      // min over the t-grid
  double margin_area_comparison = 0.0;  // min over the t-grid
  double cheeger_consistency_err = 0.0; // |P(C)/|C| - h| / h
  std::optional<double> alpha;             // stability leg only
  std::optional<double> ratio_alpha_delta; // alpha / deficit
  std::optional<double> stability_margin;  // C*deficit - alpha when deficit <= eta
};

struct CorpusViolation {
  std::uint64_t index = 0;
  std::string check;
  double margin = 0.0;
  std::string vertices;  // JSON of the offending shape
};

struct CorpusReport {
  std::vector<CorpusRow> rows;
  std::vector<CorpusViolation> violations;
  double min_margin_main = 0.0;
  double min_margin_lower = 0.0;
  double min_margin_ftouhi = 0.0;
  double min_margin_pal_width = 0.0;
  double min_margin_pal_area = 0.0;
  double min_margin_width_lemma = 0.0;
  double min_margin_area_comparison = 0.0;
  double max_consistency_err = 0.0;
  std::optional<double> max_ratio_alpha_delta;  // over shapes with deficit <= eta
  std::optional<double> min_stability_margin;
};

// Runs every check over `count` random convex polygons (3..12 vertices,
// substream seeds derived from `seed`).  The stability leg (asymmetry, ratio,
// stability margin) runs only when params is supplied.  Violations cover the
// guaranteed inequalities and Cheeger self-consistency; a negative stability
// margin is reported but not counted as a violation, since C depends on the
// user-supplied c2.  threads = 0 means hardware concurrency; results are
// identical regardless of thread count.
CorpusReport verify_corpus(std::uint64_t count, std::uint64_t seed,
                           const std::optional<StabilityParams>& params = {},
                           unsigned threads = 0);

}  // namespace cheeger2d
