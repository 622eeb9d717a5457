#pragma once

#include <array>
#include <optional>
#include <vector>

namespace cheeger2d {

// One linear constraint dot(a, x) <= b in up to three variables.
struct LpCon3 {
  std::array<double, 3> a{};
  double b = 0.0;
};

// Minimizes dot(c, x) over the box [lo, hi]^3 intersected with the given
// constraints, via randomized incremental (Seidel-style) low-dimensional LP.
// Deterministic: the insertion order is shuffled with a fixed seed.  Returns
// nullopt when infeasible.
std::optional<std::array<double, 3>> lp3(const std::array<double, 3>& c,
                                         const std::vector<LpCon3>& cons,
                                         const std::array<double, 3>& lo,
                                         const std::array<double, 3>& hi);

}  // namespace cheeger2d
