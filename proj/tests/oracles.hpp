#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's quadrature.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

/// Gauss-Legendre nodes on [-1, 1] by Newton iteration on the three-term
/// recurrence.
inline Rule gauss_legendre(int order) {
  Rule r;
  r.x.resize(order);
  r.w.resize(order);
  for (int i = 0; i < order; ++i) {
    double z = std::cos(pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[i] = z;
    r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

template <typename T, typename F>
T integrate(F&& f, double a, double b, int panels, int order = 40) {
  static thread_local std::vector<Rule> cache(200);
  if (cache[order].x.empty()) cache[order] = gauss_legendre(order);
  const Rule& r = cache[order];
  T total{};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (int i = 0; i < order; ++i) total += f(lo + 0.5 * h * (r.x[i] + 1.0)) * (0.5 * h * r.w[i]);
  }
  return total;
}

/// M_c[h](t) via x = e^u over a finite window [u_lo, u_hi] of log x.
inline cplx mellin(const std::function<double(double)>& pdf, double c, double t, double u_lo,
                   double u_hi, int panels = 400) {
  return integrate<cplx>(
      [&](double u) {
        const double x = std::exp(u);
        return std::exp(c * u) * pdf(x) * std::polar(1.0, 2.0 * pi * t * u);
      },
      u_lo, u_hi, panels);
}

inline double lognormal_pdf(double x, double mu = 0.0, double s2 = 1.0) {
  const double z = std::log(x) - mu;
  return std::exp(-z * z / (2.0 * s2)) / (x * std::sqrt(2.0 * pi * s2));
}
inline double lognormal_cdf(double x) { return 0.5 * std::erfc(-std::log(x) / std::sqrt(2.0)); }
inline double pareto2_pdf(double x) { return x > 1.0 ? 1.0 / (x * x) : 0.0; }
inline double pareto2_cdf(double x) { return x > 1.0 ? 1.0 - 1.0 / x : 0.0; }
inline double powerlaw_pdf(double x) { return x > 0.0 && x < 1.0 ? 2.0 * x : 0.0; }
inline double powerlaw_cdf(double x) { return x <= 0.0 ? 0.0 : x >= 1.0 ? 1.0 : x * x; }

/// Mellin-Plancherel on the line c = 1/2 with unit weight:
/// int |M[h](t)|^2 dt = int_0^inf h(x)^2 dx.
inline double plancherel_half(const std::function<double(double)>& h) {
  // pieces split at the kink x = 1 and mapped to log x for the tail
  const double inner = integrate<double>([&](double x) { return h(x) * h(x); }, 0.0, 1.0, 200);
  const double outer = integrate<double>(
      [&](double u) {
        const double x = std::exp(u);
        return h(x) * h(x) * x;
      },
      0.0, 40.0, 400);
  return inner + outer;
}

/// Kolmogorov-Smirnov distance of a sample to a continuous CDF.
inline double ks_statistic(std::vector<double> v, const std::function<double(double)>& cdf) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double F = cdf(v[i]);
    d = std::max({d, (i + 1) / n - F, F - i / n});
  }
  return d;
}

}  // namespace oracle
