#include "cheeger2d/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cheeger2d/rng.hpp"

namespace cheeger2d {

namespace {

constexpr double kCoefTol = 1e-14;

double feas_tol(double b) { return 1e-11 * (1.0 + std::abs(b)); }

struct Con1 {
  double a = 0.0, b = 0.0;
};
struct Con2 {
  std::array<double, 2> a{};
  double b = 0.0;
};

std::optional<double> lp1(double c, const std::vector<Con1>& cons, double lo,
                          double hi) {
  for (const Con1& k : cons) {
    if (k.a > kCoefTol) {
      hi = std::min(hi, k.b / k.a);
    } else if (k.a < -kCoefTol) {
      lo = std::max(lo, k.b / k.a);
    } else if (k.b < -feas_tol(k.b)) {
      return std::nullopt;
    }
  }
  if (lo > hi) {
    if (lo - hi > 1e-9 * (1.0 + std::abs(lo) + std::abs(hi)))
      return std::nullopt;
    lo = hi = 0.5 * (lo + hi);
  }
  return (c >= 0.0) ? lo : hi;
}

std::optional<std::array<double, 2>> lp2(const std::array<double, 2>& c,
                                         const std::vector<Con2>& cons,
                                         const std::array<double, 2>& lo,
                                         const std::array<double, 2>& hi,
                                         std::uint64_t& rs) {
  std::array<double, 2> x{c[0] >= 0.0 ? lo[0] : hi[0],
                          c[1] >= 0.0 ? lo[1] : hi[1]};
  std::vector<std::size_t> order(cons.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[splitmix64(rs) % i]);

  for (std::size_t t = 0; t < order.size(); ++t) {
    const Con2& k = cons[order[t]];
    if (k.a[0] * x[0] + k.a[1] * x[1] - k.b <= feas_tol(k.b)) continue;
    // The optimum moves onto this constraint's line; eliminate the variable
    // with the larger coefficient and recurse one dimension down.
    int j = std::abs(k.a[0]) >= std::abs(k.a[1]) ? 0 : 1;
    int i = 1 - j;
    if (std::abs(k.a[j]) <= kCoefTol) return std::nullopt;
    const double aj = k.a[j], ai = k.a[i], b = k.b;
    std::vector<Con1> sub;
    sub.reserve(t + 2);
    for (std::size_t u = 0; u < t; ++u) {
      const Con2& p = cons[order[u]];
      sub.push_back({p.a[i] - p.a[j] * ai / aj, p.b - p.a[j] * b / aj});
    }
    if (aj > 0.0) {
      sub.push_back({-ai, aj * hi[j] - b});
      sub.push_back({ai, b - aj * lo[j]});
    } else {
      sub.push_back({ai, b - aj * hi[j]});
      sub.push_back({-ai, aj * lo[j] - b});
    }
    auto xi = lp1(c[i] - c[j] * ai / aj, sub, lo[i], hi[i]);
    if (!xi) return std::nullopt;
    x[i] = *xi;
    x[j] = (b - ai * *xi) / aj;
  }
  return x;
}

}  // namespace

std::optional<std::array<double, 3>> lp3(const std::array<double, 3>& c,
                                         const std::vector<LpCon3>& cons_in,
                                         const std::array<double, 3>& lo,
                                         const std::array<double, 3>& hi) {
  // Normalize rows so the tolerances are meaningful.
  std::vector<LpCon3> cons;
  cons.reserve(cons_in.size());
  for (LpCon3 k : cons_in) {
    double s = std::max({std::abs(k.a[0]), std::abs(k.a[1]), std::abs(k.a[2])});
    if (s <= kCoefTol) {
      if (k.b < -feas_tol(k.b)) return std::nullopt;
      continue;
    }
    for (double& a : k.a) a /= s;
    k.b /= s;
    cons.push_back(k);
  }

  std::uint64_t rs = 0x2545f4914f6cdd1dull ^ (cons.size() * 0x9e3779b97f4a7c15ull);
  std::array<double, 3> x{c[0] >= 0.0 ? lo[0] : hi[0],
                          c[1] >= 0.0 ? lo[1] : hi[1],
                          c[2] >= 0.0 ? lo[2] : hi[2]};
  std::vector<std::size_t> order(cons.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[splitmix64(rs) % i]);

  for (std::size_t t = 0; t < order.size(); ++t) {
    const LpCon3& k = cons[order[t]];
    if (k.a[0] * x[0] + k.a[1] * x[1] + k.a[2] * x[2] - k.b <= feas_tol(k.b))
      continue;
    int j = 0;
    if (std::abs(k.a[1]) > std::abs(k.a[j])) j = 1;
    if (std::abs(k.a[2]) > std::abs(k.a[j])) j = 2;
    const int i0 = (j == 0) ? 1 : 0, i1 = (j == 2) ? 1 : 2;
    const double aj = k.a[j], b = k.b;
    std::vector<Con2> sub;
    sub.reserve(t + 2);
    for (std::size_t u = 0; u < t; ++u) {
      const LpCon3& p = cons[order[u]];
      sub.push_back({{p.a[i0] - p.a[j] * k.a[i0] / aj,
                      p.a[i1] - p.a[j] * k.a[i1] / aj},
                     p.b - p.a[j] * b / aj});
    }
    if (aj > 0.0) {
      sub.push_back({{-k.a[i0], -k.a[i1]}, aj * hi[j] - b});
      sub.push_back({{k.a[i0], k.a[i1]}, b - aj * lo[j]});
    } else {
      sub.push_back({{k.a[i0], k.a[i1]}, b - aj * hi[j]});
      sub.push_back({{-k.a[i0], -k.a[i1]}, aj * lo[j] - b});
    }
    auto r = lp2({c[i0] - c[j] * k.a[i0] / aj, c[i1] - c[j] * k.a[i1] / aj},
                 sub, {lo[i0], lo[i1]}, {hi[i0], hi[i1]}, rs);
    if (!r) return std::nullopt;
    x[i0] = (*r)[0];
    x[i1] = (*r)[1];
    x[j] = (b - k.a[i0] * x[i0] - k.a[i1] * x[i1]) / aj;
  }
  return x;
}

}  // namespace cheeger2d
