#pragma once

// Deterministic quadrature and sup-norm search. Every integral in the
// library goes through integrate_interval; everything here is pure.

#include <mgof/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace mgof::numerics {

inline constexpr int kDefaultOrder = 64;
inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kAbsFloor = 1e-14;
inline constexpr int kMaxDoublings = 12;
inline constexpr int kDefaultSupGrid = 4096;

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;

  /// Affine image of the rule on [a, b].
  QuadratureRule mapped(double a, double b) const {
    QuadratureRule out{nodes, weights, order};
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      out.nodes[i] = mid + half * nodes[i];
      out.weights[i] = half * weights[i];
    }
    return out;
  }
};

/// Gauss-Legendre rule of the given order on [-1, 1], nodes increasing.
/// Newton iteration on P_n from the Chebyshev-like initial guess.
inline QuadratureRule make_gauss_legendre(int order) {
  require(order >= 1, "gauss-legendre order must be positive");
  const auto n = static_cast<std::size_t>(order);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n), order};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        const auto jd = static_cast<double>(j);
        p0 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p2) / jd;
      }
      dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      const auto jd = static_cast<double>(j);
      p0 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p2) / jd;
    }
    dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

inline const QuadratureRule& gauss_legendre64() {
  static const QuadratureRule rule = make_gauss_legendre(kDefaultOrder);
  return rule;
}

// Integrands may return a scalar or a fixed-size vector of reals; the vector
// form lets several integrals share one set of nodes.
template <typename T>
struct is_real_array : std::false_type {};
template <std::size_t N>
struct is_real_array<std::array<double, N>> : std::true_type {};

template <typename T>
concept Integrable = std::same_as<T, double> || is_real_array<T>::value;

namespace detail {

template <Integrable T>
T zero_like() {
  if constexpr (std::same_as<T, double>) {
    return 0.0;
  } else {
    T out{};
    out.fill(0.0);
    return out;
  }
}

template <Integrable T>
void axpy(T& acc, double w, const T& v) {
  if constexpr (std::same_as<T, double>) {
    acc += w * v;
  } else {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i];
  }
}

template <Integrable T>
void add(T& acc, const T& v) {
  axpy(acc, 1.0, v);
}

template <Integrable T>
double max_abs(const T& v) {
  if constexpr (std::same_as<T, double>) {
    return std::abs(v);
  } else {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
}

template <Integrable T>
double max_gap(const T& a, const T& b) {
  if constexpr (std::same_as<T, double>) {
    return std::abs(a - b);
  } else {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  }
}

template <Integrable T>
bool all_finite(const T& v) {
  if constexpr (std::same_as<T, double>) {
    return std::isfinite(v);
  } else {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x); });
  }
}

template <Integrable T>
double first(const T& v) {
  if constexpr (std::same_as<T, double>) {
    return v;
  } else {
    return v[0];
  }
}

inline std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace detail

/// Composite Gauss-Legendre (order 64) estimate with `panels` equal panels.
template <typename F>
auto composite_gauss(F&& f, double a, double b, int panels) {
  using T = std::invoke_result_t<F&, double>;
  static_assert(Integrable<T>);
  const QuadratureRule& rule = gauss_legendre64();
  const double width = (b - a) / panels;
  T total = detail::zero_like<T>();
  for (int p = 0; p < panels; ++p) {
    const double lo = a + width * p;
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    T panel = detail::zero_like<T>();
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = mid + half * rule.nodes[i];
      const T v = f(t);
      if (!detail::all_finite(v))
        throw NumericalError("integrand is not finite at t = " +
                             detail::fmt_num(t));
      detail::axpy(panel, rule.weights[i], v);
    }
    detail::axpy(total, half, panel);
  }
  return total;
}

/// Adaptive composite Gauss-Legendre on [a, b]: the panel count is doubled
/// until two successive estimates agree within reltol (relative, with an
/// absolute floor of 1e-14). Throws NumericalError after 12 doublings.
template <typename F>
auto integrate_interval(F&& f, double a, double b,
                        double reltol = kDefaultRelTol) {
  require(a < b, "integrate_interval requires a < b");
  require(reltol > 0.0, "integrate_interval requires reltol > 0");
  int panels = 1;
  auto prev = composite_gauss(f, a, b, panels);
  for (int d = 0; d < kMaxDoublings; ++d) {
    panels *= 2;
    auto next = composite_gauss(f, a, b, panels);
    const double gap = detail::max_gap(next, prev);
    if (gap <= std::max(reltol * detail::max_abs(next), kAbsFloor)) return next;
    prev = std::move(next);
  }
  const auto last = composite_gauss(f, a, b, panels * 2);
  throw NumericalError("integrate_interval did not converge on [" +
                           detail::fmt_num(a) + ", " + detail::fmt_num(b) +
                           "]",
                       detail::first(last), detail::max_gap(last, prev));
}

/// Integral over [0, k] split at 1, 2, 4, ... so that each piece is resolved
/// relative to its own length; used for k spanning many decades.
template <typename F>
auto integrate_geometric(F&& f, double k, double reltol = kDefaultRelTol) {
  require(k > 0.0, "integrate_geometric requires k > 0");
  using T = std::invoke_result_t<F&, double>;
  T total = detail::zero_like<T>();
  double lo = 0.0;
  double hi = std::min(1.0, k);
  while (lo < k) {
    detail::add(total, integrate_interval(f, lo, hi, reltol));
    lo = hi;
    hi = std::min(2.0 * hi, k);
  }
  return total;
}

/// Support of an integrand on (0, inf); bounds may be 0 / +inf.
struct HalfLineSupport {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

/// Integral over (0, inf) through x = exp(u): the window [-T, T] (clipped to
/// the log-support) is doubled from T = 8 until the newly added tails fall
/// below reltol * |estimate|. Integrands with jumps must pass their support
/// so that the jump sits on a window boundary.
template <typename F>
double integrate_halfline(F&& f, double reltol = kDefaultRelTol,
                          HalfLineSupport support = {}) {
  require(reltol > 0.0, "integrate_halfline requires reltol > 0");
  require(support.lower >= 0.0 && support.lower < support.upper,
          "integrate_halfline requires 0 <= lower < upper");
  const double ulo = support.lower > 0.0 ? std::log(support.lower)
                                         : -std::numeric_limits<double>::infinity();
  const double uhi = std::isfinite(support.upper)
                         ? std::log(support.upper)
                         : std::numeric_limits<double>::infinity();
  auto g = [&](double u) {
    const double x = std::exp(u);
    const double v = f(x) * x;
    return v;
  };
  // piece of [lo, hi] intersected with the log-support
  auto piece = [&](double lo, double hi) -> double {
    lo = std::max(lo, ulo);
    hi = std::min(hi, uhi);
    if (!(lo < hi)) return 0.0;
    return integrate_interval(g, lo, hi, reltol);
  };

  constexpr double kMaxWindow = 512.0;
  double T = 8.0;
  // a bounded log-support can be covered in full
  if (std::isfinite(ulo) && std::isfinite(uhi)) return piece(ulo, uhi);
  // start the window around the finite end of the support when it sits far out
  double centre = 0.0;
  if (std::isfinite(ulo) && ulo > 0.0) centre = ulo;
  if (std::isfinite(uhi) && uhi < 0.0) centre = uhi;
  double estimate = piece(centre - T, centre + T);
  double last_tail = std::numeric_limits<double>::infinity();
  while (T < kMaxWindow) {
    const double tail =
        piece(centre - 2.0 * T, centre - T) + piece(centre + T, centre + 2.0 * T);
    estimate += tail;
    T *= 2.0;
    last_tail = std::abs(tail);
    if (last_tail <= std::max(reltol * std::abs(estimate), kAbsFloor))
      return estimate;
  }
  throw NumericalError(
      "integrate_halfline: tails did not vanish (integral appears divergent)",
      estimate, last_tail);
}

/// Maximum of f over [0, k]: dense grid followed by golden-section refinement
/// around the best cell to a bracket width of 1e-10 (relative to k).
template <typename F>
double sup_on_interval(F&& f, double k, int grid = kDefaultSupGrid) {
  require(k > 0.0, "sup_on_interval requires k > 0");
  require(grid >= 64, "sup_on_interval requires grid >= 64");
  auto probe = [&](double t) {
    const double v = f(t);
    if (!std::isfinite(v))
      throw NumericalError("sup_on_interval: f is not finite at t = " +
                           detail::fmt_num(t));
    return v;
  };
  const double h = k / grid;
  int best = 0;
  double best_val = probe(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double v = probe(i == grid ? k : h * i);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = std::max(0.0, h * (best - 1));
  double hi = std::min(k, h * (best + 1));
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = probe(x1);
  double f2 = probe(x2);
  const double width_tol = 1e-10 * std::max(1.0, k);
  while (hi - lo > width_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = probe(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = probe(x1);
    }
  }
  return std::max({best_val, f1, f2});
}

/// Ordinary least-squares slope of y on x.
inline double ls_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2,
          "ls_slope needs two equally sized series of length >= 2");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace mgof::numerics
