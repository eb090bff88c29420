#pragma once

// Monte Carlo engine: samplers, empirical-quantile calibration and the
// replication study that feeds the boxplot reports.

#include <mgof/collection.hpp>
#include <mgof/density.hpp>
#include <mgof/error.hpp>
#include <mgof/mellin.hpp>
#include <mgof/parallel.hpp>
#include <mgof/problem.hpp>
#include <mgof/rng.hpp>
#include <mgof/statistic.hpp>
#include <mgof/thresholds.hpp>
#include <mgof/weight.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mgof {

/// Calibration draws use streams offset by this constant so they never
/// collide with replication streams of the same seed.
inline constexpr std::uint64_t kCalibrationStreamBase = std::uint64_t{1} << 48;

/// n independent products X * U with X ~ density and U ~ error.
inline Sample draw_sample(const MellinDensity& density, const MellinDensity& error,
                          std::size_t n, Rng& rng) {
  std::vector<double> y(n);
  for (auto& v : y) {
    const double x = density.sample(rng);
    v = x * error.sample(rng);
  }
  return Sample(std::move(y));
}

/// The ceil((1 - alpha) B)-th smallest value (1-based).
inline double upper_order_statistic(std::vector<double> values, double alpha) {
  require(!values.empty(), "order statistic of an empty set");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  const double B = static_cast<double>(values.size());
  // the small offset keeps (1 - 0.1) * 2000 from rounding up to 1801
  auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * B - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  auto it = values.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(values.begin(), it, values.end());
  return *it;
}

/// B null statistics for every k of an increasing grid.
struct NullDistribution {
  std::vector<double> k_grid;
  std::vector<std::vector<double>> stats;  // stats[i][b] for k_grid[i]
  std::size_t n = 0;
  std::uint64_t seed = 0;

  std::size_t B() const { return stats.empty() ? 0 : stats.front().size(); }

  double quantile(std::size_t i, double alpha) const {
    return upper_order_statistic(stats.at(i), alpha);
  }

  std::vector<double> quantiles(double alpha) const {
    std::vector<double> out;
    for (std::size_t i = 0; i < k_grid.size(); ++i) out.push_back(quantile(i, alpha));
    return out;
  }
};

/// Simulates B samples of size n from the null model f0 * g_U. Draw b uses
/// stream kCalibrationStreamBase + b of `seed`.
inline NullDistribution simulate_null(const TestProblem& problem,
                                      std::vector<double> k_grid, std::size_t n,
                                      std::size_t B, std::uint64_t seed,
                                      unsigned jobs = 1) {
  require(B >= 100, "calibration requires B >= 100 (got " + std::to_string(B) + ")");
  require(n >= 2, "calibration requires n >= 2");
  require(!k_grid.empty(), "calibration requires at least one k");
  std::vector<std::vector<double>> by_draw(B);
  parallel_for(B, jobs, [&](std::size_t b) {
    Rng rng = make_stream(seed, kCalibrationStreamBase + b);
    const Sample s = draw_sample(problem.null, problem.error, n, rng);
    const auto path = statistic_path(s, problem, k_grid);
    by_draw[b].reserve(path.size());
    for (const auto& p : path) by_draw[b].push_back(p.value);
  });
  NullDistribution out{std::move(k_grid), {}, n, seed};
  out.stats.assign(out.k_grid.size(), std::vector<double>(B));
  for (std::size_t b = 0; b < B; ++b)
    for (std::size_t i = 0; i < out.k_grid.size(); ++i) out.stats[i][b] = by_draw[b][i];
  return out;
}

inline double calibrate_quantile(const TestProblem& problem, double k, std::size_t n,
                                 double alpha, std::size_t B, std::uint64_t seed,
                                 unsigned jobs = 1) {
  return simulate_null(problem, {k}, n, B, seed, jobs).quantile(0, alpha);
}

/// Draws the calibration seed from `rng`.
inline double calibrate_quantile(const TestProblem& problem, double k, std::size_t n,
                                 double alpha, std::size_t B, Rng& rng) {
  return calibrate_quantile(problem, k, n, alpha, B, rng());
}

struct SimConfig {
  std::size_t n = 100;
  std::size_t reps = 50;
  std::vector<double> k_grid{1.0};
  double alpha = 0.1;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::size_t calib_B = 1000;
  std::string null_name = "lognormal:0:1";
  std::string alt_name = "lognormal:0:1";
  std::string error_name = "pareto:2";
  double c = 0.5;
  std::string weight = "unit";
  double p = 2.0;

  void validate() const {
    require(reps >= 1, "reps must be >= 1");
    require(calib_B >= 100, "calib_B must be >= 100 (got " + std::to_string(calib_B) + ")");
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    require(n >= 2, "n must be >= 2");
    require(scale > 0.0, "scale must be positive");
    require(p >= 2.0, "p must be >= 2");
    require(!k_grid.empty(), "k grid must be nonempty");
    for (std::size_t i = 0; i < k_grid.size(); ++i)
      require(k_grid[i] > 0.0 && (i == 0 || k_grid[i] > k_grid[i - 1]),
              "k grid must be positive and strictly increasing");
  }
};

/// Example 1 (alt = null) or example 2 (alt = 2x on (0,1)) of the
/// reference experiment: k in {0.5, ..., 1.4}, 50 reps, alpha 0.1, scale 0.6.
inline SimConfig paper_sec6_config(int example, std::size_t n) {
  require(example == 1 || example == 2, "example must be 1 or 2");
  SimConfig cfg;
  cfg.n = n;
  cfg.reps = 50;
  cfg.k_grid.clear();
  for (int i = 5; i <= 14; ++i) cfg.k_grid.push_back(i / 10.0);
  cfg.alpha = 0.1;
  cfg.scale = 0.6;
  cfg.calib_B = 1000;
  cfg.null_name = "lognormal:0:1";
  cfg.alt_name = example == 1 ? "lognormal:0:1" : "powerlaw2x";
  cfg.error_name = "pareto:2";
  cfg.c = 0.5;
  cfg.p = 2.0;
  return cfg;
}

struct StatRow {
  double k = 0.0;
  std::size_t rep = 0;
  double statistic = 0.0;
};

struct ThresholdRow {
  double k = 0.0;
  double tau_theoretical = 0.0;
  double tau_bonferroni = 0.0;
  double q_empirical = 0.0;
  double q_empirical_maxtest = 0.0;
};

struct RejectionRate {
  std::string mode;
  double k = std::numeric_limits<double>::quiet_NaN();  // NaN for max-tests
  double rate = 0.0;
};

struct SimResult {
  SimConfig config;
  std::vector<StatRow> rows;  // k-major, then rep
  std::vector<ThresholdRow> thresholds;
  std::vector<RejectionRate> rejection_rates;
  double separation_truth = 0.0;
  double delta_K = 1.0;
  NullDistribution null_distribution;

  /// Statistics of one k in rep order.
  std::vector<double> statistics_at(std::size_t k_index) const {
    const std::size_t reps = config.reps;
    std::vector<double> out(reps);
    for (std::size_t r = 0; r < reps; ++r) out[r] = rows[k_index * reps + r].statistic;
    return out;
  }

  double rate(const std::string& mode) const {
    for (const auto& r : rejection_rates)
      if (r.mode == mode) return r.rate;
    throw PreconditionError("no rejection rate named '" + mode + "'");
  }
};

inline TestProblem make_problem(const SimConfig& cfg) {
  return TestProblem(cfg.c, WeightFunction::parse(cfg.weight, cfg.c),
                     catalog::parse(cfg.null_name), catalog::parse(cfg.error_name));
}

/// Replication r's sample: stream r of the seed, drawn from alt * error.
inline Sample replication_sample(const SimConfig& cfg, std::size_t rep) {
  const auto alt = catalog::parse(cfg.alt_name);
  const auto err = catalog::parse(cfg.error_name);
  Rng rng = make_stream(cfg.seed, rep);
  return draw_sample(alt, err, cfg.n, rng);
}

namespace detail {

template <typename Fn>
auto labelled(const std::string& label, Fn&& fn) {
  try {
    return fn();
  } catch (const NumericalError& e) {
    throw NumericalError(label + ": " + e.what(), e.last_estimate(), e.gap());
  } catch (const DivergenceError& e) {
    throw DivergenceError(label + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(label + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw PreconditionError(label + ": " + e.what());
  }
}

inline std::string k_label(double k) {
  std::string s = std::to_string(k);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace detail

inline std::string single_mode_name(const std::string& flavour, double k) {
  return flavour + "[k=" + detail::k_label(k) + "]";
}

/// Runs the replication study. Replication r draws from stream r of the
/// seed; the result does not depend on `jobs`.
inline SimResult run_simulation(const SimConfig& cfg, unsigned jobs = 1) {
  cfg.validate();
  const TestProblem problem = make_problem(cfg);
  const auto alt = catalog::parse(cfg.alt_name);
  require(alt.has_sampler() && problem.error.has_sampler() && problem.null.has_sampler(),
          "simulation needs samplers for the null, alternative and error densities");
  const ModelConstants mc = model_constants(problem, cfg.p);
  const std::size_t K = cfg.k_grid.size();

  SimResult res;
  res.config = cfg;
  res.delta_K = delta_K(K);

  std::vector<std::vector<double>> by_rep(cfg.reps);
  parallel_for(cfg.reps, jobs, [&](std::size_t r) {
    const Sample s = replication_sample(cfg, r);
    const auto path = detail::labelled("rep " + std::to_string(r), [&] {
      return statistic_path(s, problem, cfg.k_grid);
    });
    for (const auto& p : path) by_rep[r].push_back(p.value);
  });
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t r = 0; r < cfg.reps; ++r)
      res.rows.push_back({cfg.k_grid[i], r, by_rep[r][i]});

  res.null_distribution = simulate_null(problem, cfg.k_grid, cfg.n, cfg.calib_B, cfg.seed, jobs);
  for (std::size_t i = 0; i < K; ++i) {
    const double k = cfg.k_grid[i];
    ThresholdRow t;
    t.k = k;
    detail::labelled("k " + detail::k_label(k), [&] {
      t.tau_theoretical = tau_k(problem, mc, k, cfg.n, cfg.alpha, cfg.scale);
      t.tau_bonferroni = tau_k_bonferroni(problem, mc, k, cfg.n, cfg.alpha, K, cfg.scale);
      return 0;
    });
    t.q_empirical = res.null_distribution.quantile(i, cfg.alpha);
    t.q_empirical_maxtest = t.q_empirical / res.delta_K;
    res.thresholds.push_back(t);
  }

  const double reps = static_cast<double>(cfg.reps);
  auto fraction = [&](auto&& rejects) {
    std::size_t hits = 0;
    for (std::size_t r = 0; r < cfg.reps; ++r) hits += rejects(r) ? 1 : 0;
    return static_cast<double>(hits) / reps;
  };
  for (const char* flavour : {"theoretical", "bonferroni", "empirical"}) {
    const std::string f = flavour;
    for (std::size_t i = 0; i < K; ++i) {
      const auto& t = res.thresholds[i];
      const double thr = f == "theoretical"  ? t.tau_theoretical
                         : f == "bonferroni" ? t.tau_bonferroni
                                             : t.q_empirical;
      res.rejection_rates.push_back(
          {single_mode_name(f, t.k), t.k,
           fraction([&](std::size_t r) { return by_rep[r][i] >= thr; })});
    }
  }
  auto any_exceeds = [&](std::size_t r, auto member) {
    for (std::size_t i = 0; i < K; ++i)
      if (by_rep[r][i] >= res.thresholds[i].*member) return true;
    return false;
  };
  res.rejection_rates.push_back(
      {"max_bonferroni", std::numeric_limits<double>::quiet_NaN(),
       fraction([&](std::size_t r) { return any_exceeds(r, &ThresholdRow::tau_bonferroni); })});
  res.rejection_rates.push_back(
      {"max_empirical", std::numeric_limits<double>::quiet_NaN(),
       fraction([&](std::size_t r) {
         return any_exceeds(r, &ThresholdRow::q_empirical_maxtest);
       })});

  res.separation_truth = q2_full(mellin_difference(alt, problem.null, cfg.c), problem.weight);
  return res;
}

}  // namespace mgof
