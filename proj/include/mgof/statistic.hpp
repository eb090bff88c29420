#pragma once

// The test statistic q^2_k-hat = T_k - 2 S_k + q^2_k(f0) and its exact
// decomposition U_k + 2 W_k + q^2_k(f - f0) used as a test oracle.

#include <mgof/density.hpp>
#include <mgof/error.hpp>
#include <mgof/mellin.hpp>
#include <mgof/numerics.hpp>
#include <mgof/problem.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace mgof {

inline constexpr double kStatisticRelTol = 1e-8;

/// Observations Y_1..Y_n, all strictly positive.
class Sample {
 public:
  explicit Sample(std::vector<double> values) : values_(std::move(values)) {
    require(!values_.empty(), "sample must contain at least one observation");
    logs_.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const double y = values_[i];
      if (!(y > 0.0) || !std::isfinite(y))
        throw DataError("observation " + std::to_string(i + 1) +
                        " is not a positive finite number");
      logs_.push_back(std::log(y));
    }
  }

  std::size_t n() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> logs() const noexcept { return logs_; }

 private:
  std::vector<double> values_;
  std::vector<double> logs_;
};

struct StatisticBreakdown {
  double k = 0.0;
  double t_hat = 0.0;
  double s_hat = 0.0;
  double q2k_null = 0.0;
  double value = 0.0;  // t_hat - 2 s_hat + q2k_null
};

struct Decomposition {
  double u_k = 0.0;
  double w_k = 0.0;
  double q2k_sep = 0.0;
};

namespace detail {

/// Per-observation magnitudes y^{c-1} and phases log y, checked for overflow.
struct ObservationCache {
  std::vector<double> magnitude;
  std::span<const double> logs;
  double power_sum = 0.0;  // sum_j y_j^{2(c-1)}

  ObservationCache(const Sample& sample, double c) : logs(sample.logs()) {
    magnitude.reserve(sample.n());
    for (std::size_t j = 0; j < sample.n(); ++j) {
      const double m = std::exp((c - 1.0) * logs[j]);
      if (!std::isfinite(m) || m == 0.0 || !std::isfinite(m * m))
        throw NumericalError("Y^(c-1) overflows for observation " +
                             std::to_string(j + 1) + " (y = " +
                             std::to_string(sample.values()[j]) + ")");
      magnitude.push_back(m);
      power_sum += m * m;
    }
  }

  /// S(t) = sum_j y_j^{c-1+2 pi i t}
  Complex power_sum_at(double t) const {
    double re = 0.0;
    double im = 0.0;
    const double omega = kTwoPi * t;
    for (std::size_t j = 0; j < magnitude.size(); ++j) {
      const double phase = omega * logs[j];
      re += magnitude[j] * std::cos(phase);
      im += magnitude[j] * std::sin(phase);
    }
    return {re, im};
  }
};

/// Integrands of (T, S, q^2_k(f0)) at t >= 0; the symmetric half is
/// accounted for by the caller's factor two.
inline std::array<double, 3> statistic_terms(const ObservationCache& cache,
                                             const TestProblem& problem,
                                             double t) {
  const double n = static_cast<double>(cache.magnitude.size());
  const Complex s = cache.power_sum_at(t);
  const Complex m_null = problem.null.mellin(problem.c, t);
  const Complex m_err = problem.error.mellin(problem.c, t);
  const double w2 = problem.weight.w2(t);
  const double pen = w2 / std::norm(m_err);
  const double t_term =
      n > 1.0 ? (std::norm(s) - cache.power_sum) / (n * (n - 1.0)) * pen : 0.0;
  const double s_term = (s * std::conj(m_null * m_err)).real() / n * pen;
  const double q_term = std::norm(m_null) * w2;
  return {t_term, s_term, q_term};
}

inline std::array<double, 3> integrate_terms(const ObservationCache& cache,
                                             const TestProblem& problem,
                                             double lo, double hi,
                                             double reltol) {
  auto terms = numerics::integrate_interval(
      [&](double t) { return statistic_terms(cache, problem, t); }, lo, hi,
      reltol);
  for (double& v : terms) v *= 2.0;
  return terms;
}

inline StatisticBreakdown assemble(double k, const std::array<double, 3>& terms) {
  return {k, terms[0], terms[1], terms[2], terms[0] - 2.0 * terms[1] + terms[2]};
}

}  // namespace detail

/// T_k-hat: the off-diagonal U-statistic estimating int |M_c[f]|^2 w^2 over
/// [-k, k], evaluated per node as (|S(t)|^2 - P) / (n (n - 1)).
inline double t_hat(const Sample& sample, const TestProblem& problem, double k,
                    double reltol = kStatisticRelTol) {
  require(sample.n() >= 2, "t_hat requires n >= 2");
  require(k > 0.0, "t_hat requires k > 0");
  const detail::ObservationCache cache(sample, problem.c);
  return detail::integrate_terms(cache, problem, 0.0, k, reltol)[0];
}

/// S_k-hat: the linear cross term against the known null transform.
inline double s_hat(const Sample& sample, const TestProblem& problem, double k,
                    double reltol = kStatisticRelTol) {
  require(k > 0.0, "s_hat requires k > 0");
  const detail::ObservationCache cache(sample, problem.c);
  return detail::integrate_terms(cache, problem, 0.0, k, reltol)[1];
}

/// q^2_k(f0), known from the null transform.
inline double q2k_null(const TestProblem& problem, double k,
                       double reltol = kStatisticRelTol) {
  require(k > 0.0, "q2k_null requires k > 0");
  return q2_truncated(
      [&](double t) { return problem.null.mellin(problem.c, t); },
      problem.weight, k, reltol);
}

/// q^2_k-hat with all three terms sharing one set of quadrature nodes.
inline StatisticBreakdown statistic(const Sample& sample,
                                    const TestProblem& problem, double k,
                                    double reltol = kStatisticRelTol) {
  require(sample.n() >= 2, "statistic requires n >= 2");
  require(k > 0.0, "statistic requires k > 0");
  const detail::ObservationCache cache(sample, problem.c);
  return detail::assemble(k, detail::integrate_terms(cache, problem, 0.0, k, reltol));
}

/// The statistic along an increasing grid of k. Integrals are accumulated
/// over consecutive segments [k_{i-1}, k_i], so the whole path costs about
/// as much as its largest member.
inline std::vector<StatisticBreakdown> statistic_path(
    const Sample& sample, const TestProblem& problem, std::span<const double> ks,
    double reltol = kStatisticRelTol) {
  require(sample.n() >= 2, "statistic requires n >= 2");
  require(!ks.empty(), "statistic_path requires a nonempty k grid");
  const detail::ObservationCache cache(sample, problem.c);
  std::vector<StatisticBreakdown> out;
  out.reserve(ks.size());
  std::array<double, 3> acc{0.0, 0.0, 0.0};
  double lo = 0.0;
  for (double k : ks) {
    require(k > lo, "statistic_path requires a strictly increasing positive k grid");
    const auto seg = detail::integrate_terms(cache, problem, lo, k, reltol);
    for (std::size_t i = 0; i < 3; ++i) acc[i] += seg[i];
    out.push_back(detail::assemble(k, acc));
    lo = k;
  }
  return out;
}

/// U_k, W_k and q^2_k(f - f0) for a sample drawn from `truth`. Test oracle:
/// needs the true density's transform, which is unknown in practice.
inline Decomposition decomposition_oracle(const Sample& sample,
                                          const TestProblem& problem,
                                          const MellinDensity& truth, double k,
                                          double reltol = kStatisticRelTol) {
  require(sample.n() >= 2, "decomposition_oracle requires n >= 2");
  require(k > 0.0, "decomposition_oracle requires k > 0");
  require(truth.has_mellin(), "decomposition_oracle needs the true Mellin transform");
  const detail::ObservationCache cache(sample, problem.c);
  const double n = static_cast<double>(sample.n());
  const double c = problem.c;
  auto integrand = [&](double t) -> std::array<double, 2> {
    const Complex m_err = problem.error.mellin(c, t);
    const Complex m_y = truth.mellin(c, t) * m_err;
    const Complex m_y0 = problem.null.mellin(c, t) * m_err;
    const double pen = problem.weight.w2(t) / std::norm(m_err);
    // centred phases phi_j(t) = Y_j^{c-1+2 pi i t} - M_c[g_Y](t)
    Complex big_phi{0.0, 0.0};
    double diag = 0.0;
    const double omega = kTwoPi * t;
    for (std::size_t j = 0; j < sample.n(); ++j) {
      const Complex phi = std::polar(cache.magnitude[j], omega * cache.logs[j]) - m_y;
      big_phi += phi;
      diag += std::norm(phi);
    }
    const double u = (std::norm(big_phi) - diag) / (n * (n - 1.0)) * pen;
    const double w = (big_phi * std::conj(m_y - m_y0)).real() / n * pen;
    return {2.0 * u, 2.0 * w};
  };
  const auto uw = numerics::integrate_interval(integrand, 0.0, k, reltol);
  const double sep = q2_truncated(
      [&](double t) { return truth.mellin(c, t) - problem.null.mellin(c, t); },
      problem.weight, k, reltol);
  return {uw[0], uw[1], sep};
}

}  // namespace mgof
