#pragma once

// Positive-support densities with closed-form Mellin transforms.

#include <mgof/error.hpp>
#include <mgof/numerics.hpp>
#include <mgof/rng.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mgof {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Exponent c - 1 + 2*pi*i*t of the Mellin kernel along the line Re = c.
inline Complex mellin_exponent(double c, double t) {
  return {c - 1.0, kTwoPi * t};
}

class MellinDensity {
 public:
  using Pdf = std::function<double(double)>;
  using Transform = std::function<Complex(double, double)>;
  using Moment = std::function<double(double)>;
  using Sampler = std::function<double(Rng&)>;
  using WeightedSup = std::function<double(double)>;

  struct Parts {
    std::string name;
    Pdf pdf;
    Transform mellin;           // (c, t) -> M_c[h](t); may be empty
    Moment moment;              // s -> E[X^s], +inf when divergent; may be empty
    Sampler sampler;            // may be empty
    numerics::HalfLineSupport support{};
    WeightedSup weighted_sup;   // e -> sup_x pdf(x) x^e; may be empty
  };

  explicit MellinDensity(Parts parts) : p_(std::move(parts)) {
    require(static_cast<bool>(p_.pdf), "density '" + p_.name + "' needs a pdf");
  }

  const std::string& name() const noexcept { return p_.name; }
  double pdf(double x) const { return p_.pdf(x); }
  const numerics::HalfLineSupport& support() const noexcept { return p_.support; }

  bool has_mellin() const noexcept { return static_cast<bool>(p_.mellin); }
  bool has_moment() const noexcept { return static_cast<bool>(p_.moment); }
  bool has_sampler() const noexcept { return static_cast<bool>(p_.sampler); }

  Complex mellin(double c, double t) const {
    if (!p_.mellin)
      throw PreconditionError("density '" + p_.name +
                              "' has no closed-form Mellin transform");
    return p_.mellin(c, t);
  }

  /// E[X^s]; falls back to quadrature when no closed form is catalogued.
  double moment(double s, double reltol = numerics::kDefaultRelTol) const {
    if (p_.moment) return p_.moment(s);
    try {
      return numerics::integrate_halfline(
          [&](double x) { return std::pow(x, s) * p_.pdf(x); }, reltol,
          p_.support);
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::infinity();
    }
  }

  /// sup_x pdf(x) * x^e over the support (+inf when unbounded).
  double weighted_sup(double e) const {
    if (p_.weighted_sup) return p_.weighted_sup(e);
    const double ulo = p_.support.lower > 0.0 ? std::log(p_.support.lower) : -60.0;
    const double uhi =
        std::isfinite(p_.support.upper) ? std::log(p_.support.upper) : 60.0;
    auto g = [&](double v) {
      const double x = std::exp(ulo + v);
      return p_.pdf(x) * std::pow(x, e);
    };
    return numerics::sup_on_interval(g, uhi - ulo);
  }

  double sample(Rng& rng) const {
    if (!p_.sampler)
      throw PreconditionError("density '" + p_.name + "' has no sampler");
    return p_.sampler(rng);
  }

 private:
  Parts p_;
};

namespace catalog {

namespace detail {
inline double inf() { return std::numeric_limits<double>::infinity(); }
}  // namespace detail

/// Log-normal: log X ~ N(mu, sigma2).
inline MellinDensity lognormal(double mu, double sigma2) {
  require(sigma2 > 0.0, "lognormal requires sigma^2 > 0");
  const double sigma = std::sqrt(sigma2);
  std::ostringstream name;
  name.precision(17);
  name << "lognormal:" << mu << ':' << sigma2;
  MellinDensity::Parts p;
  p.name = name.str();
  p.pdf = [mu, sigma2](double x) {
    if (!(x > 0.0)) return 0.0;
    const double l = std::log(x) - mu;
    return std::exp(-l * l / (2.0 * sigma2)) /
           (x * std::sqrt(2.0 * std::numbers::pi * sigma2));
  };
  p.mellin = [mu, sigma2](double c, double t) {
    const Complex s = mellin_exponent(c, t);
    return std::exp(s * mu + s * s * (sigma2 / 2.0));
  };
  p.moment = [mu, sigma2](double s) {
    return std::exp(mu * s + sigma2 * s * s / 2.0);
  };
  p.sampler = [mu, sigma](Rng& rng) {
    return std::exp(mu + sigma * standard_normal(rng));
  };
  p.weighted_sup = [mu, sigma2](double e) {
    const double a = e - 1.0;
    return std::exp(a * mu + a * a * sigma2 / 2.0) /
           std::sqrt(2.0 * std::numbers::pi * sigma2);
  };
  return MellinDensity(std::move(p));
}

/// Pareto on (1, inf) with pdf (theta - 1) x^{-theta}; theta = 2 gives x^{-2}.
inline MellinDensity pareto(double theta) {
  require(theta > 1.0, "pareto requires exponent theta > 1");
  std::ostringstream name;
  name.precision(17);
  name << "pareto:" << theta;
  const double k = theta - 1.0;
  MellinDensity::Parts p;
  p.name = name.str();
  p.support = {1.0, detail::inf()};
  p.pdf = [theta, k](double x) { return x > 1.0 ? k * std::pow(x, -theta) : 0.0; };
  p.mellin = [theta, k](double c, double t) -> Complex {
    if (!(c < theta))
      throw DivergenceError("pareto Mellin transform requires c < theta");
    return k / Complex(theta - c, -kTwoPi * t);
  };
  p.moment = [k](double s) { return s < k ? k / (k - s) : detail::inf(); };
  p.sampler = [k](Rng& rng) { return std::pow(1.0 - uniform_open01(rng), -1.0 / k); };
  p.weighted_sup = [theta, k](double e) { return e <= theta ? k : detail::inf(); };
  return MellinDensity(std::move(p));
}

/// Density 2x on (0, 1).
inline MellinDensity powerlaw2x() {
  MellinDensity::Parts p;
  p.name = "powerlaw2x";
  p.support = {0.0, 1.0};
  p.pdf = [](double x) { return (x > 0.0 && x < 1.0) ? 2.0 * x : 0.0; };
  p.mellin = [](double c, double t) -> Complex {
    if (!(c > -1.0))
      throw DivergenceError("powerlaw2x Mellin transform requires c > -1");
    return 2.0 / Complex(c + 1.0, kTwoPi * t);
  };
  p.moment = [](double s) { return s > -2.0 ? 2.0 / (s + 2.0) : detail::inf(); };
  p.sampler = [](Rng& rng) { return std::sqrt(uniform_open01(rng)); };
  p.weighted_sup = [](double e) { return e >= -1.0 ? 2.0 : detail::inf(); };
  return MellinDensity(std::move(p));
}

/// Uniform on (0, 1); as an error density this is multiplicative censoring.
inline MellinDensity uniform01() {
  MellinDensity::Parts p;
  p.name = "uniform";
  p.support = {0.0, 1.0};
  p.pdf = [](double x) { return (x > 0.0 && x < 1.0) ? 1.0 : 0.0; };
  p.mellin = [](double c, double t) -> Complex {
    if (!(c > 0.0))
      throw DivergenceError("uniform Mellin transform requires c > 0");
    return 1.0 / Complex(c, kTwoPi * t);
  };
  p.moment = [](double s) { return s > -1.0 ? 1.0 / (s + 1.0) : detail::inf(); };
  p.sampler = [](Rng& rng) { return uniform_open01(rng); };
  p.weighted_sup = [](double e) { return e >= 0.0 ? 1.0 : detail::inf(); };
  return MellinDensity(std::move(p));
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos
                                         ? std::string_view::npos
                                         : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_number(const std::string& text, std::string_view spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DataError("bad numeric parameter '" + text + "' in density spec '" +
                    std::string(spec) + "'");
  }
}

}  // namespace detail

/// Resolves `lognormal:<mu>:<sigma2>`, `pareto:<theta>`, `powerlaw2x`,
/// `uniform`. Missing parameters take the defaults 0, 1 and 2.
inline MellinDensity parse(std::string_view spec) {
  const auto parts = detail::split(spec, ':');
  const std::string& kind = parts.front();
  auto param = [&](std::size_t i, double fallback) {
    return parts.size() > i ? detail::parse_number(parts[i], spec) : fallback;
  };
  try {
    if (kind == "lognormal" && parts.size() <= 3)
      return lognormal(param(1, 0.0), param(2, 1.0));
    if (kind == "pareto" && parts.size() <= 2) return pareto(param(1, 2.0));
    if (kind == "powerlaw2x" && parts.size() == 1) return powerlaw2x();
    if (kind == "uniform" && parts.size() == 1) return uniform01();
  } catch (const PreconditionError& e) {
    throw DataError(std::string("invalid density spec '") + std::string(spec) +
                    "': " + e.what());
  }
  throw DataError("unknown density spec '" + std::string(spec) + "'");
}

}  // namespace catalog

}  // namespace mgof
