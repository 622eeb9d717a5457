#pragma once

#include "cheeger2d/families.hpp"
#include "cheeger2d/polygon.hpp"

namespace cheeger2d {

struct AsymmetryResult {
  double value = 0.0;     // min_T d_H(K, T) / w(K) over equilateral T of width w(K)
  EquilateralPose pose;   // a minimizing triangle pose
};

// Equilateral-triangle asymmetry of K: the Hausdorff distance from K to the
// nearest equilateral triangle of width w(K), normalized by w(K).  The
// translation subproblem at fixed rotation is solved exactly (it is a
// Chebyshev fit of the support-function difference by its first circular
// harmonics, handled with a cutting-plane scheme over a 3-variable LP); the
// rotation is minimized over a grid of starts plus edge-alignment candidates,
// each refined by golden-section search.
AsymmetryResult asymmetry(const ConvexPolygon& poly);

}  // namespace cheeger2d
