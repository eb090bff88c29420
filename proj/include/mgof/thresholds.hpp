#pragma once

// Model constants, the ill-posedness penalties Delta_4 / Delta_inf and the
// explicit critical values of the single-k and Bonferroni tests.

#include <mgof/error.hpp>
#include <mgof/numerics.hpp>
#include <mgof/problem.hpp>
#include <mgof/statistic.hpp>

#include <cmath>
#include <functional>
#include <string>
#include <variant>

namespace mgof {

/// L_alpha = 1 - log(alpha) >= 1.
inline double l_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  return 1.0 - std::log(alpha);
}

/// The inversion penalty t -> w^2(t) / |M_c[g_U](t)|^2, either taken from a
/// concrete problem or from a model of the error decay.
struct PenaltyModel {
  std::function<double(double)> weight2;
  std::function<double(double)> penalty;

  static PenaltyModel of(const TestProblem& problem) {
    return {[&problem](double t) { return problem.weight.w2(t); },
            [&problem](double t) { return problem.penalty(t); }};
  }

  /// Delta_4(k) = int_{-k}^{k} |M_c[g_U]|^{-4} w^4.
  double delta4(double k, double reltol = numerics::kDefaultRelTol) const {
    require(k > 0.0, "delta4 requires k > 0");
    return 2.0 * numerics::integrate_geometric(
                     [this](double t) {
                       const double p = penalty(t);
                       return p * p;
                     },
                     k, reltol);
  }

  /// Delta_inf(k) = (sup_{|t|<=k} w(t) / |M_c[g_U](t)|)^4.
  double deltainf(double k) const {
    require(k > 0.0, "deltainf requires k > 0");
    const double s = numerics::sup_on_interval(penalty, k);
    return s * s;
  }
};

inline double delta4(const TestProblem& problem, double k,
                     double reltol = numerics::kDefaultRelTol) {
  return PenaltyModel::of(problem).delta4(k, reltol);
}

inline double deltainf(const TestProblem& problem, double k) {
  return PenaltyModel::of(problem).deltainf(k);
}

struct ModelConstants {
  double c_u = 1.0;  // sup-to-L1 ratio of the error density
  double v1 = 1.0;   // max(E[Y^{2(c-1)}], 1) under the null
  double v2 = 1.0;   // max(E[Y^{4(c-1)}], 1)
  double vp = 1.0;   // max(E[Y^{2p(c-1)}], 1)
  double p = 2.0;
};

namespace detail {

inline double finite_moment(const MellinDensity& h, double s, double reltol,
                            const std::string& what) {
  const double m = h.moment(s, reltol);
  if (!std::isfinite(m))
    throw DivergenceError("moment E[X^" + std::to_string(s) + "] of " + h.name() +
                          " is infinite (" + what + ")");
  return m;
}

}  // namespace detail

/// Null-side constants feeding the critical values. Moments of Y = XU
/// factorise as E[X^s] E[U^s].
inline ModelConstants model_constants(const TestProblem& problem, double p = 2.0,
                                      double reltol = numerics::kDefaultRelTol) {
  require(p >= 2.0, "moment order p must be >= 2");
  const double c = problem.c;
  auto y_moment = [&](double s, const std::string& what) {
    return detail::finite_moment(problem.null, s, reltol, what) *
           detail::finite_moment(problem.error, s, reltol, what);
  };
  const double sup = problem.error.weighted_sup(2.0 * c - 1.0);
  if (!std::isfinite(sup))
    throw DivergenceError("error density " + problem.error.name() +
                          " is unbounded in L_inf(x^{2c-1})");
  const double l1 =
      detail::finite_moment(problem.error, 2.0 * (c - 1.0), reltol, "c_U norm");
  ModelConstants k;
  k.p = p;
  k.c_u = std::max(sup / l1, 1.0);
  k.v1 = std::max(y_moment(2.0 * (c - 1.0), "order 2(c-1)"), 1.0);
  k.v2 = std::max(y_moment(4.0 * (c - 1.0), "order 4(c-1)"), 1.0);
  k.vp = std::max(y_moment(2.0 * p * (c - 1.0), "order 2p(c-1)"), 1.0);
  return k;
}

namespace detail {

inline void check_threshold_args(double k, std::size_t n, double alpha, double scale) {
  require(k > 0.0, "threshold requires k > 0");
  require(n >= 2, "threshold requires n >= 2");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(scale > 0.0, "scale must be positive");
}

}  // namespace detail

/// Critical value tau_k(alpha) of the single-k test; `scale` multiplies the
/// whole bracket.
inline double tau_k(const ModelConstants& mc, double delta4_k, double deltainf_k,
                    double k, std::size_t n, double alpha, double scale = 1.0) {
  detail::check_threshold_args(k, n, alpha, scale);
  const double nd = static_cast<double>(n);
  const double L = l_alpha(alpha / 2.0);
  const double first =
      (18.0 * mc.c_u * mc.v2 + 69493.0 * (std::sqrt(2.0 * k) / nd) * (L / alpha)) *
      std::sqrt(L) * std::sqrt(delta4_k) / nd;
  const double second = 52.0 * mc.v1 * mc.c_u * L * std::sqrt(deltainf_k) / nd;
  return scale * (first + second);
}

inline double tau_k(const TestProblem& problem, const ModelConstants& mc, double k,
                    std::size_t n, double alpha, double scale = 1.0) {
  return tau_k(mc, delta4(problem, k), deltainf(problem, k), k, n, alpha, scale);
}

/// Updated critical value tau_{k|alpha} giving level alpha/|K| under the
/// p-th moment condition.
inline double tau_k_bonferroni(const ModelConstants& mc, double delta4_k,
                               double deltainf_k, double k, std::size_t n,
                               double alpha, std::size_t collection_size,
                               double scale = 1.0) {
  detail::check_threshold_args(k, n, alpha, scale);
  require(collection_size >= 1, "collection size must be >= 1");
  require(mc.p >= 2.0, "moment order p must be >= 2");
  const double nd = static_cast<double>(n);
  const double size = static_cast<double>(collection_size);
  const double L = l_alpha(alpha / (2.0 * size));
  const double first = (18.0 * mc.c_u * mc.vp +
                        69493.0 * (std::sqrt(2.0 * k) * std::pow(size, 1.0 / (mc.p - 1.0)) / nd) *
                            (L * L / alpha)) *
                       std::sqrt(L) * std::sqrt(delta4_k) / nd;
  const double second = 52.0 * mc.v1 * mc.c_u * L * std::sqrt(deltainf_k) / nd;
  return scale * (first + second);
}

inline double tau_k_bonferroni(const TestProblem& problem, const ModelConstants& mc,
                               double k, std::size_t n, double alpha,
                               std::size_t collection_size, double scale = 1.0) {
  return tau_k_bonferroni(mc, delta4(problem, k), deltainf(problem, k), k, n, alpha,
                          collection_size, scale);
}

namespace mode {
struct Theoretical {};
struct TheoreticalBonferroni {
  double p = 2.0;
  std::size_t collection_size = 1;
};
/// A calibrated (1 - alpha) null quantile from Monte Carlo with B samples.
struct Empirical {
  double quantile = 0.0;
  std::size_t B = 0;
};
}  // namespace mode

using ThresholdMode =
    std::variant<mode::Theoretical, mode::TheoreticalBonferroni, mode::Empirical>;

inline std::string mode_name(const ThresholdMode& m) {
  struct {
    std::string operator()(const mode::Theoretical&) const { return "theoretical"; }
    std::string operator()(const mode::TheoreticalBonferroni&) const { return "bonferroni"; }
    std::string operator()(const mode::Empirical&) const { return "empirical"; }
  } visitor;
  return std::visit(visitor, m);
}

struct TestOutcome {
  double k = 0.0;
  double statistic = 0.0;
  double threshold = 0.0;
  double alpha = 0.0;
  ThresholdMode mode = mode::Theoretical{};
  bool reject = false;
};

/// Threshold for `mode`; `scale` applies to the theoretical formulas only.
/// `constants` must have been computed with the moment order of the mode.
inline double threshold_for(const TestProblem& problem, const ModelConstants& constants,
                            double k, std::size_t n, double alpha,
                            const ThresholdMode& m, double scale) {
  if (const auto* e = std::get_if<mode::Empirical>(&m)) return e->quantile;
  if (const auto* b = std::get_if<mode::TheoreticalBonferroni>(&m)) {
    ModelConstants mc = constants;
    if (mc.p != b->p) mc = model_constants(problem, b->p);
    return tau_k_bonferroni(problem, mc, k, n, alpha, b->collection_size, scale);
  }
  return tau_k(problem, constants, k, n, alpha, scale);
}

inline TestOutcome decide(double k, double stat, double threshold, double alpha,
                          const ThresholdMode& m) {
  return {k, stat, threshold, alpha, m, stat >= threshold};
}

/// The single-k test: reject iff q^2_k-hat >= threshold.
inline TestOutcome test_single(const Sample& sample, const TestProblem& problem,
                               const ModelConstants& constants, double k,
                               double alpha, const ThresholdMode& m,
                               double scale = 1.0) {
  const double stat = statistic(sample, problem, k).value;
  const double thr = threshold_for(problem, constants, k, sample.n(), alpha, m, scale);
  return decide(k, stat, thr, alpha, m);
}

inline TestOutcome test_single(const Sample& sample, const TestProblem& problem,
                               double k, double alpha, const ThresholdMode& m,
                               double scale = 1.0) {
  double p = 2.0;
  if (const auto* b = std::get_if<mode::TheoreticalBonferroni>(&m)) p = b->p;
  return test_single(sample, problem, model_constants(problem, p), k, alpha, m, scale);
}

}  // namespace mgof
