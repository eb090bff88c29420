#pragma once

#include <mgof/density.hpp>
#include <mgof/error.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

namespace mgof {

/// Symmetric weight w^2(t) choosing what the quadratic functional measures:
/// the density itself (Unit), its survival function (Survival) or its
/// beta-th derivative (Derivative).
class WeightFunction {
 public:
  enum class Variant { Unit, Survival, Derivative };

  static WeightFunction unit() { return WeightFunction(Variant::Unit, 0, 0.0); }

  static WeightFunction survival(double c) {
    require(c != 1.0, "survival weight has a pole at c = 1");
    return WeightFunction(Variant::Survival, 0, c);
  }

  static WeightFunction derivative(int beta, double c) {
    require(beta >= 1, "derivative weight requires beta >= 1");
    return WeightFunction(Variant::Derivative, beta, c);
  }

  /// `unit`, `survival`, `derivative:<beta>`; c is the Mellin line.
  static WeightFunction parse(std::string_view spec, double c) {
    if (spec == "unit") return unit();
    if (spec == "survival") return survival(c);
    if (spec.starts_with("derivative:")) {
      const std::string rest(spec.substr(11));
      int beta = 0;
      try {
        std::size_t used = 0;
        beta = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        throw DataError("bad derivative order in weight spec '" +
                        std::string(spec) + "'");
      }
      return derivative(beta, c);
    }
    throw DataError("unknown weight spec '" + std::string(spec) + "'");
  }

  Variant variant() const noexcept { return variant_; }
  int beta() const noexcept { return beta_; }
  double c() const noexcept { return c_; }

  /// Exponent a in w^2(t) ~ (1 + t^2)^a.
  double exponent() const noexcept {
    switch (variant_) {
      case Variant::Unit: return 0.0;
      case Variant::Survival: return -1.0;
      case Variant::Derivative: return static_cast<double>(beta_);
    }
    return 0.0;
  }

  double w2(double t) const noexcept {
    const double ft = 4.0 * std::numbers::pi * std::numbers::pi * t * t;
    switch (variant_) {
      case Variant::Unit:
        return 1.0;
      case Variant::Survival:
        return 1.0 / ((c_ - 1.0) * (c_ - 1.0) + ft);
      case Variant::Derivative: {
        double prod = 1.0;
        for (int j = 1; j <= beta_; ++j) {
          const double shift = c_ + beta_ - j;
          prod *= shift * shift + ft;
        }
        return prod;
      }
    }
    return 1.0;
  }

  std::string name() const {
    switch (variant_) {
      case Variant::Unit: return "unit";
      case Variant::Survival: return "survival";
      case Variant::Derivative: return "derivative:" + std::to_string(beta_);
    }
    return "unit";
  }

 private:
  WeightFunction(Variant v, int beta, double c) : variant_(v), beta_(beta), c_(c) {}

  Variant variant_;
  int beta_;
  double c_;
};

}  // namespace mgof
