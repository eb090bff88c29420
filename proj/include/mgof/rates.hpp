#pragma once

// Radius-of-testing calculators: rho^2_{k,s}, the oracle dimension k*,
// separation constants, eta factors and the tabulated asymptotic orders.

#include <mgof/collection.hpp>
#include <mgof/error.hpp>
#include <mgof/numerics.hpp>
#include <mgof/problem.hpp>
#include <mgof/thresholds.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace mgof {

enum class SmoothnessKind { Ordinary, Super };

/// Regularity s(t) = (1 + t^2)^{s/2} (ordinary) or exp(|t|^s) (super).
struct RegularityClass {
  SmoothnessKind kind = SmoothnessKind::Ordinary;
  double s = 1.0;
  double radius = 1.0;

  double s_of(double t) const {
    return kind == SmoothnessKind::Ordinary ? std::pow(1.0 + t * t, s / 2.0)
                                            : std::exp(std::pow(std::abs(t), s));
  }

  double s2(double t) const {
    const double v = s_of(t);
    return v * v;
  }

  /// Ordinary smoothness needs s > a so that w / s vanishes at infinity.
  void validate(double weight_exponent) const {
    require(s > 0.0 && radius > 0.0, "regularity requires s > 0 and R > 0");
    if (kind == SmoothnessKind::Ordinary)
      require(s > weight_exponent,
              "ordinary smooth regularity requires s > a (s = " + std::to_string(s) +
                  ", a = " + std::to_string(weight_exponent) + ")");
  }
};

/// Decay |M_c[g_U](t)| ~ (1 + t^2)^{-gamma/2} or exp(-|t|^sigma).
struct ErrorSmoothness {
  SmoothnessKind kind = SmoothnessKind::Ordinary;
  double param = 1.0;  // gamma or sigma

  double modulus2(double t) const {
    return kind == SmoothnessKind::Ordinary
               ? std::pow(1.0 + t * t, -param)
               : std::exp(-2.0 * std::pow(std::abs(t), param));
  }

  /// Decay exponent of |M_c[g_U]| fitted on t in [1, 50]: the slope of
  /// -log|M| against log t (ordinary) or of log(-log|M|) against log t (super).
  static double fitted_exponent(const MellinDensity& error, double c,
                                SmoothnessKind kind) {
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i <= 100; ++i) {
      const double t = std::exp(std::log(50.0) * i / 100.0);
      const double v = -std::log(std::abs(error.mellin(c, t)));
      if (!std::isfinite(v)) continue;  // underflowed modulus
      if (kind == SmoothnessKind::Ordinary) {
        x.push_back(std::log(t));
        y.push_back(v);
      } else if (v > 0.0) {
        x.push_back(std::log(t));
        y.push_back(std::log(v));
      }
    }
    require(x.size() >= 10, "fitted_exponent: too few finite points on [1, 50]");
    return numerics::ls_slope(x, y);
  }

  /// Checks the declared decay against a concrete error density (10%).
  void validate(const MellinDensity& error, double c) const {
    const double fitted = fitted_exponent(error, c, kind);
    if (std::abs(fitted - param) > 0.1 * param)
      throw PreconditionError("declared error smoothness " + std::to_string(param) +
                              " does not match the fitted decay " +
                              std::to_string(fitted) + " of " + error.name());
  }
};

/// Moment bound v, the free constant d and the moment order p.
struct AlternativeClass {
  double v_bound = 1.0;
  double d = 1.0;
  double p = 2.0;
};

/// Penalty model w^2 = (1 + t^2)^a over the modelled error decay.
inline PenaltyModel model_penalty(const ErrorSmoothness& error, double a) {
  return {[a](double t) { return std::pow(1.0 + t * t, a); },
          [error, a](double t) {
            return std::pow(1.0 + t * t, a) / error.modulus2(t);
          }};
}

/// rho^2_{k,s}(n) = w^2(k)/s^2(k) v (1/n)(sqrt(Delta_4(k)) v sqrt(Delta_inf(k))).
/// Returns +inf when a penalty overflows.
inline double rho2_k(const RegularityClass& reg, const PenaltyModel& model, double k,
                     double n) {
  require(k > 0.0, "rho2_k requires k > 0");
  require(n >= 2.0, "rho2_k requires n >= 2");
  const double bias = model.weight2(k) / reg.s2(k);
  try {
    const double var =
        std::max(std::sqrt(model.delta4(k)), std::sqrt(model.deltainf(k))) / n;
    return std::max(bias, var);
  } catch (const NumericalError&) {
    return std::numeric_limits<double>::infinity();
  }
}

inline double rho2_k(const RegularityClass& reg, const TestProblem& problem, double k,
                     double n) {
  return rho2_k(reg, PenaltyModel::of(problem), k, n);
}

/// 256 log-spaced points on [1e-2, n].
inline std::vector<double> default_k_grid(double n, std::size_t points = 256) {
  require(n > 1e-2 && points >= 2, "k grid needs n > 0.01 and >= 2 points");
  std::vector<double> grid(points);
  const double lo = std::log(1e-2);
  const double hi = std::log(n);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(points - 1));
  return grid;
}

struct KStar {
  double k_star = 0.0;
  double rho2_star = 0.0;
};

inline KStar k_star(const RegularityClass& reg, const PenaltyModel& model, double n,
                    const std::vector<double>& k_grid) {
  require(!k_grid.empty(), "k_star requires a nonempty grid");
  KStar best{k_grid.front(), std::numeric_limits<double>::infinity()};
  for (double k : k_grid) {
    const double r = rho2_k(reg, model, k, n);
    if (r < best.rho2_star) best = {k, r};
  }
  return best;
}

inline KStar k_star(const RegularityClass& reg, const PenaltyModel& model, double n) {
  return k_star(reg, model, n, default_k_grid(n));
}

/// eta^2_k = 1 v sqrt(2k) / (d n).
inline double eta_k(double k, double n, double d) {
  require(k > 0.0 && n > 0.0 && d > 0.0, "eta_k requires k, n, d > 0");
  return std::max(1.0, std::sqrt(2.0 * k) / (d * n));
}

/// eta^2_{K,s} = 1 v sqrt(2 k) |K|^{1/(p-1)} / (d n delta_K^4).
inline double eta_K(std::size_t collection_size, double k_sel, double n, double d,
                    double p) {
  require(k_sel > 0.0 && n > 0.0 && d > 0.0, "eta_K requires k, n, d > 0");
  require(p >= 2.0, "eta_K requires p >= 2");
  const double dk = delta_K(collection_size);
  return std::max(1.0, std::sqrt(2.0 * k_sel) *
                           std::pow(static_cast<double>(collection_size), 1.0 / (p - 1.0)) /
                           (d * n * std::pow(dk, 4)));
}

/// A^2_gamma for the single-k test, or its max-test version (V(p) and
/// L^{5/2}) when `bonferroni` is set.
inline double separation_constant(double gamma, const RegularityClass& reg,
                                  const ModelConstants& mc, const AlternativeClass& alt,
                                  bool bonferroni) {
  require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
  const double L = l_alpha(gamma / 8.0);
  const double v_null = bonferroni ? mc.vp : mc.v2;
  const double lpow = bonferroni ? std::pow(L, 2.5) : std::pow(L, 1.5);
  return reg.radius * reg.radius + 140.0 * (L / gamma) * mc.c_u * v_null +
         260.0 * (L / gamma) * mc.c_u * alt.v_bound + 833934.0 * (lpow / gamma) * alt.d;
}

enum class CollectionRegime { None, Naive, Geometric, LogLog };

struct RateRow {
  double n = 0.0;
  double k_pred = 0.0;
  double rho2_pred = 0.0;
};

/// Symbolic orders (constants set to one) of k* and the radius for the
/// tabulated regimes. Edge cases of the ordinary/ordinary row: gamma + a =
/// -1/4 gives sqrt(log n)/n, gamma + a < -1/4 the parametric 1/n; k is then
/// left unspecified (NaN).
inline std::vector<RateRow> rate_order(const RegularityClass& reg,
                                       const ErrorSmoothness& error, double a,
                                       const std::vector<double>& n_list,
                                       CollectionRegime collection = CollectionRegime::None) {
  require(!n_list.empty(), "rate_order requires a nonempty n list");
  const bool os_reg = reg.kind == SmoothnessKind::Ordinary;
  const bool os_err = error.kind == SmoothnessKind::Ordinary;
  if (!os_reg && !os_err)
    throw PreconditionError("super smooth density with super smooth error is not tabulated");
  if (os_reg) reg.validate(a);
  const double s = reg.s;
  const double g = error.param;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<RateRow> rows;
  for (double n : n_list) {
    require(collection == CollectionRegime::None ? n >= 2.0 : n > 16.0,
            "rate_order requires n >= 2 (n > 16 for collections, whose orders "
            "involve iterated logarithms)");
    const double ln = std::log(n);
    const double lln = std::log(ln);
    const double llln = std::log(lln);
    RateRow r{n, nan, nan};
    if (os_reg && os_err) {
      const double denom = 4.0 * s + 4.0 * g + 1.0;
      if (g + a < -0.25 || g + a == -0.25) {
        if (collection != CollectionRegime::None)
          throw PreconditionError(
              "adaptive collections are tabulated only for gamma + a > -1/4");
        r.rho2_pred = (g + a == -0.25) ? std::sqrt(ln) / n : 1.0 / n;
      } else {
        double eff = n;
        switch (collection) {
          case CollectionRegime::None: break;
          case CollectionRegime::Naive: eff = n / ln; break;
          case CollectionRegime::Geometric: eff = n / std::sqrt(lln); break;
          case CollectionRegime::LogLog:
            throw PreconditionError(
                "the log-log collection is tabulated only for super smooth densities");
        }
        r.k_pred = std::pow(eff, 2.0 / denom);
        r.rho2_pred = std::pow(eff, -4.0 * (s - a) / denom);
      }
    } else if (os_reg && !os_err) {
      if (collection == CollectionRegime::Geometric || collection == CollectionRegime::LogLog)
        throw PreconditionError(
            "ordinary smooth density with super smooth error is tabulated only "
            "without or with the naive collection");
      r.k_pred = std::pow(ln, 1.0 / g);
      r.rho2_pred = std::pow(ln, -2.0 * (s - a) / g);
    } else {
      const double base = std::pow(ln, (2.0 * (g + a) + 0.5) / s) / n;
      r.k_pred = std::pow(ln, 1.0 / s);
      switch (collection) {
        case CollectionRegime::None: r.rho2_pred = base; break;
        case CollectionRegime::Naive: r.rho2_pred = ln * base; break;
        case CollectionRegime::Geometric: r.rho2_pred = std::sqrt(lln) * base; break;
        case CollectionRegime::LogLog: r.rho2_pred = std::sqrt(llln) * base; break;
      }
    }
    rows.push_back(r);
  }
  return rows;
}

inline std::string regime_name(const RegularityClass& reg, const ErrorSmoothness& error) {
  auto tag = [](SmoothnessKind k) { return k == SmoothnessKind::Ordinary ? "os" : "ss"; };
  return std::string(tag(reg.kind)) + "-" + tag(error.kind);
}

}  // namespace mgof
