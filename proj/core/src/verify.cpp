#include "cheeger2d/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "cheeger2d/errors.hpp"
#include "cheeger2d/hausdorff.hpp"
#include "cheeger2d/rng.hpp"
#include "cheeger2d/serialize.hpp"

namespace cheeger2d {

double equilateral_wh() { return 3.0 + std::sqrt(kPi * kSqrt3); }

double deficit_sup() { return 1.0 + std::sqrt(kPi * kSqrt3); }

double deficit_from_wh(double wh) { return equilateral_wh() - wh; }

double deficit(const ConvexPolygon& poly) {
  return deficit_from_wh(cheeger_scalars(poly).wh);
}

double check_main(const ShapeScalars& s) { return equilateral_wh() - s.wh; }
double check_main(const ConvexPolygon& poly) {
  return check_main(cheeger_scalars(poly));
}

double check_lower(const ShapeScalars& s) { return s.wh - 2.0; }
double check_lower(const ConvexPolygon& poly) {
  return check_lower(cheeger_scalars(poly));
}

double check_ftouhi(const ShapeScalars& s) {
  return s.width * (1.0 / s.inradius + std::sqrt(kPi / s.area) - s.h);
}
double check_ftouhi(const ConvexPolygon& poly) {
  return check_ftouhi(cheeger_scalars(poly));
}

PalMargins check_pal(const ShapeScalars& s) {
  return {(3.0 * s.inradius - s.width) / s.width,
          (kSqrt3 * s.area - s.width * s.width) / (s.width * s.width)};
}
PalMargins check_pal(const ConvexPolygon& poly) {
  return check_pal(cheeger_scalars(poly));
}

namespace {

// Shared body of the two offset checks; w and r are passed in when the
// caller already has them.
void require_below_inradius(double t, double r, const char* who) {
  if (t < 0.0) throw NegativeOffset(std::string(who) + ": offset must be >= 0");
  if (t >= r * (1.0 - 1e-12))
    throw OffsetBeyondInradius(std::string(who) +
                               ": offset must be below the inradius");
}

double width_lemma_margin(const ConvexPolygon& poly, double t, double w) {
  auto ip = inner_parallel(poly, t);
  double wt = ip ? ip->minimal_width().width : 0.0;
  return (wt - (w - 3.0 * t)) / w;
}

double area_comparison_margin(const ConvexPolygon& poly, double t, double w) {
  auto ip = inner_parallel(poly, t);
  double at = ip ? ip->area() : 0.0;
  double side = w - 3.0 * t;  // equal-width equilateral triangle shrinks to
  double ref = side > 0.0 ? side * side / kSqrt3 : 0.0;  // nothing at t = w/3
  return (at - ref) / (w * w);
}

}  // namespace

double check_width_lemma(const ConvexPolygon& poly, double t) {
  double r = inradius_center(poly).r;
  require_below_inradius(t, r, "check_width_lemma");
  return width_lemma_margin(poly, t, poly.minimal_width().width);
}

double check_area_comparison(const ConvexPolygon& poly, double t) {
  double r = inradius_center(poly).r;
  require_below_inradius(t, r, "check_area_comparison");
  return area_comparison_margin(poly, t, poly.minimal_width().width);
}

StabilityParams stability_constant(double eta, double c2) {
  const double cap = std::sqrt(kPi * kSqrt3);
  if (!(eta > 0.0) || !(eta < cap))
    throw ParamOutOfRange("stability_constant: eta must lie in (0, sqrt(pi*sqrt(3)))");
  if (!(c2 > 0.0))
    throw ParamOutOfRange("stability_constant: c2 must be positive");
  return {eta, c2, 2.0 * cap / (c2 * kSqrt3 * (cap - eta) * (cap - eta))};
}

double default_c2() { return 25.0 * std::sqrt(5.0); }

double remark_constant() {
  return 8.0 * std::pow(3.0, 0.25) / (75.0 * std::sqrt(5.0 * kPi));
}

std::optional<double> stability_check(const ConvexPolygon& poly,
                                      const StabilityParams& params) {
  double d = deficit(poly);
  if (d > params.eta) return std::nullopt;
  return params.C * d - asymmetry(poly).value;
}

double rect_RL_root(double L) {
  if (!(L >= 1.0)) throw ParamOutOfRange("rect_RL_root: aspect must be >= 1");
  // Root of (4-pi) t^2 - 2(L+1) t + L = 0 in (0, 1/2), written so that large
  // L does not cancel.
  const double b = L + 1.0;
  return L / (b + std::sqrt(b * b - (4.0 - kPi) * L));
}

double SweepRecord::rel_err() const {
  double m = 0.0;
  for (const SweepEntry& e : entries)
    if (e.reference)
      m = std::max(m, std::abs(e.measured - *e.reference) / std::abs(*e.reference));
  return m;
}

std::vector<SweepRecord> sweep_sharpness(std::span<const double> eps_list) {
  const double h_T0 = equilateral_wh() / kSqrt3;
  std::vector<SweepRecord> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    if (!(eps > 0.0) || !(eps <= 0.5))
      throw ParamOutOfRange("sweep_sharpness: eps must lie in (0, 1/2]");
    ConvexPolygon R = family_Reps(eps);
    ShapeScalars s = cheeger_scalars(R);
    double delta = deficit_from_wh(s.wh);
    double alpha = asymmetry(R).value;
    double dh = hausdorff_distance(R, family_Teps(eps));
    SweepRecord rec;
    rec.param = eps;
    rec.entries = {{"delta_wh", delta, eps * h_T0},
                   {"alpha", alpha, eps / (kSqrt3 * (kSqrt3 - eps))},
                   {"hausdorff_RT", dh, eps / kSqrt3},
                   {"ratio_alpha_delta", alpha / delta, std::nullopt},
                   {"h_R", s.h, h_T0}};
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SweepRecord> sweep_rectangles(std::span<const double> L_list) {
  std::vector<SweepRecord> out;
  out.reserve(L_list.size());
  for (double L : L_list) {
    ShapeScalars s = cheeger_scalars(rect_RL(L));  // validates L >= 1
    double ref_h = 1.0 / rect_RL_root(L);
    SweepRecord rec;
    rec.param = L;
    rec.entries = {{"h_RL", s.h, ref_h}, {"wh", s.wh, ref_h}};
    out.push_back(std::move(rec));
  }
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2)
    throw ParamOutOfRange("loglog_slope: need two paired samples or more");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = std::log(x[i]) - mx;
    num += dx * (std::log(y[i]) - my);
    den += dx * dx;
  }
  return num / den;
}

double loglog_tail_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2)
    throw ParamOutOfRange("loglog_tail_slope: need two paired samples or more");
  return (std::log(y[n - 1]) - std::log(y[n - 2])) /
         (std::log(x[n - 1]) - std::log(x[n - 2]));
}

namespace {

struct GridMargins {
  double width_lemma = std::numeric_limits<double>::infinity();
  double area_comparison = std::numeric_limits<double>::infinity();
};

// Minima over the 8-point grid t_j = r (j+1)/9, sharing one inner set per t.
GridMargins grid_margins(const ConvexPolygon& poly, double w, double r) {
  GridMargins gm;
  for (int j = 0; j < 8; ++j) {
    double t = r * (j + 1) / 9.0;
    auto ip = inner_parallel(poly, t);
    double wt = ip ? ip->minimal_width().width : 0.0;
    double at = ip ? ip->area() : 0.0;
    gm.width_lemma = std::min(gm.width_lemma, (wt - (w - 3.0 * t)) / w);
    double side = w - 3.0 * t;
    double ref = side > 0.0 ? side * side / kSqrt3 : 0.0;
    gm.area_comparison = std::min(gm.area_comparison, (at - ref) / (w * w));
  }
  return gm;
}

}  // namespace

ShapeReport build_report(const ConvexPolygon& poly, bool with_asymmetry,
                         const std::optional<StabilityParams>& params) {
  ShapeReport rep;
  rep.scalars = cheeger_scalars(poly);
  rep.deficit = deficit_from_wh(rep.scalars.wh);
  GridMargins gm = grid_margins(poly, rep.scalars.width, rep.scalars.inradius);
  PalMargins pal = check_pal(rep.scalars);
  rep.margins = {{"area_comparison_grid", gm.area_comparison},
                 {"ftouhi", check_ftouhi(rep.scalars)},
                 {"lower", check_lower(rep.scalars)},
                 {"main", check_main(rep.scalars)},
                 {"pal_area", pal.area_margin},
                 {"pal_width", pal.width_margin},
                 {"width_lemma_grid", gm.width_lemma}};
  bool applicable = params && rep.deficit <= params->eta;
  if (with_asymmetry || applicable) {
    AsymmetryResult a = asymmetry(poly);
    rep.asymmetry_value = a.value;
    rep.asymmetry_pose = a.pose;
  }
  if (applicable) rep.stability_margin = params->C * rep.deficit - *rep.asymmetry_value;
  return rep;
}

CorpusReport verify_corpus(std::uint64_t count, std::uint64_t seed,
                           const std::optional<StabilityParams>& params,
                           unsigned threads) {
  if (count < 1) throw ParamOutOfRange("verify_corpus: count must be >= 1");

  struct Item {
    CorpusRow row;
    std::string shape_json;
  };
  std::vector<Item> items(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto work = [&] {
    try {
      for (;;) {
        std::uint64_t i = next.fetch_add(1);
        if (i >= count) return;
        std::mt19937_64 g(substream_seed(seed, i));
        int n = 3 + static_cast<int>(g() % 10);
        ConvexPolygon shape = random_convex(n, g());
        Item& it = items[i];
        CorpusRow& row = it.row;
        row.index = i;
        row.n = static_cast<int>(shape.size());
        ShapeScalars& s = row.scalars;
        s.width = shape.minimal_width().width;
        s.inradius = inradius_center(shape).r;
        s.area = shape.area();
        s.perimeter = shape.perimeter();
        s.diameter = shape.diameter();
        CheegerResult cr = cheeger(shape);
        s.h = cr.h;
        s.wh = s.width * s.h;
        row.deficit = deficit_from_wh(s.wh);
        row.margin_main = check_main(s);
        row.margin_lower = check_lower(s);
        row.margin_ftouhi = check_ftouhi(s);
        PalMargins pal = check_pal(s);
        row.margin_pal_width = pal.width_margin;
        row.margin_pal_area = pal.area_margin;
        GridMargins gm = grid_margins(shape, s.width, s.inradius);
        row.margin_width_lemma = gm.width_lemma;
        row.margin_area_comparison = gm.area_comparison;
        row.cheeger_consistency_err =
            std::abs(cr.cheeger_set.perimeter() / cr.cheeger_set.area() - cr.h) /
            cr.h;
        if (params) {
          double alpha = asymmetry(shape).value;
          row.alpha = alpha;
          row.ratio_alpha_delta = alpha / row.deficit;
          if (row.deficit <= params->eta)
            row.stability_margin = params->C * row.deficit - alpha;
        }
        it.shape_json = shape_to_json(shape);
      }
    } catch (...) {
      std::scoped_lock lk(error_mu);
      if (!first_error) first_error = std::current_exception();
      next.store(count);  // drain remaining work
    }
  };

  unsigned T = threads ? threads : std::thread::hardware_concurrency();
  T = std::max(1u, std::min<unsigned>(T, static_cast<unsigned>(
                                             std::min<std::uint64_t>(count, 64))));
  if (T == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  CorpusReport rep;
  rep.rows.reserve(count);
  const double inf = std::numeric_limits<double>::infinity();
  rep.min_margin_main = rep.min_margin_lower = rep.min_margin_ftouhi = inf;
  rep.min_margin_pal_width = rep.min_margin_pal_area = inf;
  rep.min_margin_width_lemma = rep.min_margin_area_comparison = inf;
  for (Item& it : items) {
    const CorpusRow& row = it.row;
    auto flag = [&](const char* check, double margin) {
      if (margin < -1e-9)
        rep.violations.push_back({row.index, check, margin, it.shape_json});
    };
    flag("main", row.margin_main);
    flag("lower", row.margin_lower);
    flag("ftouhi", row.margin_ftouhi);
    flag("pal_width", row.margin_pal_width);
    flag("pal_area", row.margin_pal_area);
    flag("width_lemma", row.margin_width_lemma);
    flag("area_comparison", row.margin_area_comparison);
    if (row.cheeger_consistency_err > 1e-9)
      rep.violations.push_back({row.index, "cheeger_consistency",
                                row.cheeger_consistency_err, it.shape_json});
    rep.min_margin_main = std::min(rep.min_margin_main, row.margin_main);
    rep.min_margin_lower = std::min(rep.min_margin_lower, row.margin_lower);
    rep.min_margin_ftouhi = std::min(rep.min_margin_ftouhi, row.margin_ftouhi);
    rep.min_margin_pal_width =
        std::min(rep.min_margin_pal_width, row.margin_pal_width);
    rep.min_margin_pal_area =
        std::min(rep.min_margin_pal_area, row.margin_pal_area);
    rep.min_margin_width_lemma =
        std::min(rep.min_margin_width_lemma, row.margin_width_lemma);
    rep.min_margin_area_comparison =
        std::min(rep.min_margin_area_comparison, row.margin_area_comparison);
    rep.max_consistency_err =
        std::max(rep.max_consistency_err, row.cheeger_consistency_err);
    if (row.stability_margin) {
      if (!rep.min_stability_margin ||
          *row.stability_margin < *rep.min_stability_margin)
        rep.min_stability_margin = row.stability_margin;
      if (!rep.max_ratio_alpha_delta ||
          *row.ratio_alpha_delta > *rep.max_ratio_alpha_delta)
        rep.max_ratio_alpha_delta = row.ratio_alpha_delta;
    }
    rep.rows.push_back(std::move(it.row));
  }
  return rep;
}

}  // namespace cheeger2d
