#pragma once

// Numeric Mellin transforms, the multiplicative convolution theorem and the
// weighted quadratic functionals q^2 and q^2_k.

#include <mgof/density.hpp>
#include <mgof/error.hpp>
#include <mgof/numerics.hpp>
#include <mgof/problem.hpp>
#include <mgof/weight.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

namespace mgof {

/// M_c[h](t) = int_0^inf x^{c-1} h(x) exp(2 pi i t log x) dx by quadrature.
template <typename Pdf>
Complex mellin_numeric(Pdf&& pdf, double c, double t,
                       double reltol = numerics::kDefaultRelTol,
                       numerics::HalfLineSupport support = {}) {
  const double re = numerics::integrate_halfline(
      [&](double x) {
        return std::pow(x, c - 1.0) * pdf(x) * std::cos(kTwoPi * t * std::log(x));
      },
      reltol, support);
  const double im = numerics::integrate_halfline(
      [&](double x) {
        return std::pow(x, c - 1.0) * pdf(x) * std::sin(kTwoPi * t * std::log(x));
      },
      reltol, support);
  return {re, im};
}

inline Complex mellin_numeric(const MellinDensity& h, double c, double t,
                              double reltol = numerics::kDefaultRelTol) {
  return mellin_numeric([&h](double x) { return h.pdf(x); }, c, t, reltol,
                        h.support());
}

/// M_c[h * g_U](t) = M_c[h](t) M_c[g_U](t).
inline Complex mellin_product(const TestProblem& problem,
                              const MellinDensity& density, double t) {
  return density.mellin(problem.c, t) * problem.error.mellin(problem.c, t);
}

/// int_{-k}^{k} |deltaM(t)|^2 w^2(t) dt, evaluated as twice the integral
/// over [0, k] (|deltaM| is even for real densities).
template <typename DeltaM>
double q2_truncated(DeltaM&& delta_m, const WeightFunction& weight, double k,
                    double reltol = numerics::kDefaultRelTol) {
  require(k > 0.0, "q2_truncated requires k > 0");
  return 2.0 * numerics::integrate_geometric(
                   [&](double t) { return std::norm(delta_m(t)) * weight.w2(t); },
                   k, reltol);
}

/// q^2 over the whole line: k doubles from 8 until the added tail is below
/// reltol times the estimate. Throws when the tail does not shrink.
template <typename DeltaM>
double q2_full(DeltaM&& delta_m, const WeightFunction& weight,
               double reltol = numerics::kDefaultRelTol) {
  auto integrand = [&](double t) { return std::norm(delta_m(t)) * weight.w2(t); };
  double k = 8.0;
  double total = 2.0 * numerics::integrate_geometric(integrand, k, reltol);
  double prev_inc = std::numeric_limits<double>::infinity();
  int growing = 0;
  constexpr int kMaxTailDoublings = 48;
  for (int d = 0; d < kMaxTailDoublings; ++d) {
    const double inc = 2.0 * numerics::integrate_interval(integrand, k, 2.0 * k, reltol);
    total += inc;
    k *= 2.0;
    if (inc <= std::max(reltol * total, numerics::kAbsFloor)) return total;
    growing = inc >= prev_inc ? growing + 1 : 0;
    if (growing >= 4)
      throw NumericalError(
          "q2_full: |M|^2 w^2 is not integrable (weight grows faster than the "
          "transform decays)",
          total, inc);
    prev_inc = inc;
  }
  throw NumericalError("q2_full: tail did not converge", total, prev_inc);
}

/// t -> M_c[f](t) - M_c[f0](t) for two catalogued densities.
inline auto mellin_difference(const MellinDensity& f, const MellinDensity& f0,
                              double c) {
  return [&f, &f0, c](double t) { return f.mellin(c, t) - f0.mellin(c, t); };
}

}  // namespace mgof
