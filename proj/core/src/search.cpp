#include "cheeger2d/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

#include "cheeger2d/asymmetry.hpp"
#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/errors.hpp"
#include "cheeger2d/families.hpp"
#include "cheeger2d/rng.hpp"
#include "cheeger2d/serialize.hpp"

namespace cheeger2d {

namespace {

double wh_of(const ConvexPolygon& poly) {
  return poly.minimal_width().width * cheeger(poly).h;
}

// Uniform in (0, 1]: never returns 0, so log() below is safe.
double u01(std::mt19937_64& g) {
  return static_cast<double>((g() >> 11) + 1) * 0x1.0p-53;
}

// One standard 2D gaussian via Box-Muller; avoids std::normal_distribution,
// whose output sequence is implementation-defined.
Vec2 gauss2(std::mt19937_64& g) {
  double r = std::sqrt(-2.0 * std::log(u01(g)));
  double a = kTwoPi * u01(g);
  return {r * std::cos(a), r * std::sin(a)};
}

struct RestartOutcome {
  ConvexPolygon shape;
  double value = 0.0;
  std::vector<TracePoint> trajectory;
};

RestartOutcome run_restart(const SearchConfig& cfg, int ridx) {
  std::mt19937_64 g(substream_seed(cfg.seed, static_cast<std::uint64_t>(ridx)));
  ConvexPolygon cur =
      cfg.start ? *cfg.start : random_convex(cfg.n_vertices, g());
  double cur_val = wh_of(cur);
  RestartOutcome out{cur, cur_val, {{0, cur_val}}};
  double step = cfg.step_initial;
  for (int it = 1; it <= cfg.iters; ++it) {
    std::vector<Vec2> verts = cur.vertices();
    std::size_t k = g() % verts.size();
    verts[k] += gauss2(g) * (step * cur.diameter());
    double val;
    try {
      ConvexPolygon cand = canonicalize(std::move(verts));
      val = wh_of(cand);
      if (val > cur_val) {
        cur = std::move(cand);
        cur_val = val;
        out.trajectory.push_back({it, val});
        step = std::min(step / (cfg.step_decay * cfg.step_decay),
                        cfg.step_initial);
        continue;
      }
    } catch (const DegenerateInput&) {
      // perturbation collapsed the polygon; treat as a rejected move
    }
    step = std::max(step * cfg.step_decay, 1e-6);
  }
  out.shape = std::move(cur);
  out.value = cur_val;
  return out;
}

}  // namespace

SearchResult maximize_wh(const SearchConfig& cfg) {
  if (cfg.n_vertices < 3)
    throw ParamOutOfRange("maximize_wh: n_vertices must be >= 3");
  if (cfg.iters < 1) throw ParamOutOfRange("maximize_wh: iters must be >= 1");
  if (cfg.restarts < 1)
    throw ParamOutOfRange("maximize_wh: restarts must be >= 1");
  if (!(cfg.step_initial > 0.0))
    throw ParamOutOfRange("maximize_wh: step_initial must be positive");
  if (!(cfg.step_decay > 0.0) || !(cfg.step_decay < 1.0))
    throw ParamOutOfRange("maximize_wh: step_decay must lie in (0, 1)");

  std::vector<std::optional<RestartOutcome>> outcomes(cfg.restarts);
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto work = [&] {
    try {
      for (;;) {
        int r = next.fetch_add(1);
        if (r >= cfg.restarts) return;
        outcomes[r] = run_restart(cfg, r);
      }
    } catch (...) {
      std::scoped_lock lk(error_mu);
      if (!first_error) first_error = std::current_exception();
      next.store(cfg.restarts);
    }
  };
  unsigned T = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  T = std::max(1u, std::min(T, static_cast<unsigned>(cfg.restarts)));
  if (T == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Winner: highest value; ties broken by the serialized vertices, then by
  // restart index, so the result never depends on scheduling.
  int best = 0;
  std::string best_json = shape_to_json(outcomes[0]->shape);
  for (int r = 1; r < cfg.restarts; ++r) {
    const RestartOutcome& o = *outcomes[r];
    if (o.value < outcomes[best]->value) continue;
    std::string j = shape_to_json(o.shape);
    if (o.value > outcomes[best]->value || j < best_json) {
      best = r;
      best_json = std::move(j);
    }
  }
  RestartOutcome& win = *outcomes[best];
  double asym = asymmetry(win.shape).value;
  return {std::move(win.shape), win.value, asym, std::move(win.trajectory),
          best};
}

std::vector<std::pair<double, double>> minimize_wh_trace(
    const std::vector<double>& L_list) {
  for (std::size_t i = 0; i < L_list.size(); ++i) {
    if (!(L_list[i] >= 1.0))
      throw ParamOutOfRange("minimize_wh_trace: aspects must be >= 1");
    if (i && L_list[i] < L_list[i - 1])
      throw ParamOutOfRange("minimize_wh_trace: aspects must be nondecreasing");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(L_list.size());
  for (double L : L_list) out.emplace_back(L, cheeger_scalars(rect_RL(L)).wh);
  return out;
}

}  // namespace cheeger2d
