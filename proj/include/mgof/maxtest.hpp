#pragma once

// Bonferroni aggregation of single-k tests over a collection of dimension
// parameters.

#include <mgof/collection.hpp>
#include <mgof/error.hpp>
#include <mgof/problem.hpp>
#include <mgof/rates.hpp>
#include <mgof/statistic.hpp>
#include <mgof/thresholds.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <variant>
#include <vector>

namespace mgof {

namespace maxmode {
/// Per-k thresholds tau_{k|alpha} (level alpha/|K| each).
struct Theoretical {};
/// Per-k calibrated (1 - alpha) null quantiles, each multiplied by 1/delta_K.
struct Empirical {
  std::vector<double> quantiles;  // one per collection member
  std::size_t B = 0;
};
}  // namespace maxmode

using MaxTestMode = std::variant<maxmode::Theoretical, maxmode::Empirical>;

struct MaxTestOutcome {
  std::vector<TestOutcome> per_k;
  bool reject = false;
  double delta_K = 1.0;
};

/// Per-k thresholds of the max-test for a sample of size n.
inline std::vector<double> max_test_thresholds(const TestProblem& problem,
                                               const ModelConstants& constants,
                                               const Collection& collection,
                                               std::size_t n, double alpha,
                                               const MaxTestMode& m, double scale) {
  std::vector<double> out;
  out.reserve(collection.size());
  if (const auto* e = std::get_if<maxmode::Empirical>(&m)) {
    require(e->quantiles.size() == collection.size(),
            "empirical max-test needs one calibrated quantile per collection member");
    const double dk = delta_K(collection);
    for (double q : e->quantiles) out.push_back(q / dk);
    return out;
  }
  for (double k : collection.members)
    out.push_back(tau_k_bonferroni(problem, constants, k, n, alpha, collection.size(), scale));
  return out;
}

/// Rejects as soon as one member test rejects.
inline MaxTestOutcome max_test(const Sample& sample, const TestProblem& problem,
                               const ModelConstants& constants,
                               const Collection& collection, double alpha,
                               const MaxTestMode& m, double scale = 1.0) {
  require(collection.size() >= 1, "max_test requires a nonempty collection");
  const auto thresholds =
      max_test_thresholds(problem, constants, collection, sample.n(), alpha, m, scale);
  const auto path = statistic_path(sample, problem, collection.members);
  ThresholdMode per_mode = mode::TheoreticalBonferroni{constants.p, collection.size()};
  if (const auto* e = std::get_if<maxmode::Empirical>(&m))
    per_mode = mode::Empirical{0.0, e->B};
  MaxTestOutcome out;
  out.delta_K = delta_K(collection);
  for (std::size_t i = 0; i < collection.size(); ++i) {
    ThresholdMode this_mode = per_mode;
    if (auto* e = std::get_if<mode::Empirical>(&this_mode)) e->quantile = thresholds[i];
    out.per_k.push_back(
        decide(collection.members[i], path[i].value, thresholds[i], alpha, this_mode));
    out.reject = out.reject || out.per_k.back().reject;
  }
  return out;
}

inline MaxTestOutcome max_test(const Sample& sample, const TestProblem& problem,
                               const Collection& collection, double alpha, double p,
                               const MaxTestMode& m, double scale = 1.0) {
  return max_test(sample, problem, model_constants(problem, p), collection, alpha, m,
                  scale);
}

struct AdaptiveRadius {
  double k_sel = 0.0;
  double r2 = 0.0;
};

/// r^2_{k,s}(n) = w^2(k)/s^2(k) v (1/n)(sqrt(Delta_4)/delta_K v sqrt(Delta_inf)/delta_K^2),
/// minimised over the collection.
inline AdaptiveRadius adaptive_radius(const RegularityClass& reg,
                                      const Collection& collection,
                                      const PenaltyModel& model, double n) {
  require(n >= 2.0, "adaptive_radius requires n >= 2");
  require(collection.size() >= 1, "adaptive_radius requires a nonempty collection");
  const double dk = delta_K(collection);
  AdaptiveRadius best{collection.members.front(), std::numeric_limits<double>::infinity()};
  for (double k : collection.members) {
    const double bias = model.weight2(k) / reg.s2(k);
    double r2 = std::numeric_limits<double>::infinity();
    try {
      const double var = std::max(std::sqrt(model.delta4(k)) / dk,
                                  std::sqrt(model.deltainf(k)) / (dk * dk)) /
                         n;
      r2 = std::max(bias, var);
    } catch (const NumericalError&) {
    }
    if (r2 < best.r2) best = {k, r2};
  }
  return best;
}

inline AdaptiveRadius adaptive_radius(const RegularityClass& reg,
                                      const Collection& collection,
                                      const TestProblem& problem, double n) {
  return adaptive_radius(reg, collection, PenaltyModel::of(problem), n);
}

/// rho^2_{K,s}(x) = min over the collection of rho^2_{k,s}(x); x may be a
/// fractional effective sample size.
inline double rho2_collection(const RegularityClass& reg, const Collection& collection,
                              const PenaltyModel& model, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (double k : collection.members) {
    const double bias = model.weight2(k) / reg.s2(k);
    try {
      const double var =
          std::max(std::sqrt(model.delta4(k)), std::sqrt(model.deltainf(k))) / x;
      best = std::min(best, std::max(bias, var));
    } catch (const NumericalError&) {
    }
  }
  return best;
}

}  // namespace mgof
