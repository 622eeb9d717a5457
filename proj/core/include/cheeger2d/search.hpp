#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cheeger2d/polygon.hpp"

namespace cheeger2d {

struct SearchConfig {
  int n_vertices = 3;        // upper bound: vertices can merge away
  std::uint64_t seed = 0;
  int iters = 20000;
  int restarts = 8;
  double step_initial = 0.25;  // relative to the current diameter
  double step_decay = 0.95;    // shrink on reject; step never drops below 1e-6
  std::optional<ConvexPolygon> start;  // fixed start for every restart
  unsigned threads = 0;        // 0 = hardware concurrency
};

struct TracePoint {
  int iteration = 0;
  double value = 0.0;
};

struct SearchResult {
  ConvexPolygon best_shape;
  double best_value = 0.0;   // w*h of best_shape
  double asym_of_best = 0.0; // equilateral asymmetry of best_shape
  std::vector<TracePoint> trajectory;  // accepted improvements, winning restart
  int winning_restart = 0;
};

// Random-restart hill climbing over vertex coordinates, maximizing w*h.
// Each move perturbs one random vertex and re-canonicalizes (so vertices can
// merge and the count can drop); strict improvements are accepted.  The step
// size shrinks geometrically on rejection and relaxes back toward
// step_initial on acceptance.  Restarts use substream seeds and run in
// parallel; the result is deterministic for a given config, ties between
// restarts broken by the smaller restart index.
SearchResult maximize_wh(const SearchConfig& cfg);

// Measured w*h along the rectangle family rect_RL(L): strictly decreasing,
// every value > 2, with 1/rect_RL_root(L) as the closed-form reference.
// Requires L_list nondecreasing with each L >= 1.
std::vector<std::pair<double, double>> minimize_wh_trace(
    const std::vector<double>& L_list);

}  // namespace cheeger2d
