#include <mgof/numerics.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

using namespace mgof;
using namespace mgof::numerics;

TEST(GaussLegendre, WeightsSumToTwoAndNodesAreSymmetric) {
  const auto& rule = gauss_legendre64();
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  EXPECT_NEAR(sum, 2.0, 1e-14);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    EXPECT_NEAR(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i], 1e-15);
}

TEST(GaussLegendre, IntegratesHighDegreePolynomialsExactly) {
  // int_0^1 x^d dx = 1 / (d + 1) for every d below 2 * 64
  for (int d : {0, 1, 7, 40, 100, 127}) {
    const double v = composite_gauss([d](double x) { return std::pow(x, d); }, 0.0, 1.0, 1);
    EXPECT_NEAR(v, 1.0 / (d + 1), 1e-14) << "degree " << d;
  }
}

TEST(GaussLegendre, SmallRuleMatchesKnownNodes) {
  const auto r = make_gauss_legendre(2);
  EXPECT_NEAR(std::abs(r.nodes[0]), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
}

TEST(IntegrateInterval, OscillatoryIntegrand) {
  const double v = integrate_interval([](double t) { return std::cos(40.0 * t); }, 0.0, 3.0);
  EXPECT_NEAR(v, std::sin(120.0) / 40.0, 1e-12);
}

TEST(IntegrateInterval, VectorValuedIntegrandsShareNodes) {
  const auto v = integrate_interval(
      [](double t) { return std::array<double, 2>{t, t * t}; }, 0.0, 2.0);
  EXPECT_NEAR(v[0], 2.0, 1e-13);
  EXPECT_NEAR(v[1], 8.0 / 3.0, 1e-13);
}

TEST(IntegrateInterval, NonFiniteIntegrandThrows) {
  EXPECT_THROW(integrate_interval([](double t) { return 1.0 / (t - 0.5) / 0.0; }, 0.0, 1.0),
               NumericalError);
}

TEST(IntegrateInterval, NonConvergenceReportsLastEstimate) {
  try {
    integrate_interval([](double t) { return std::cos(1e7 * t) * 1e3; }, 0.0, 1.0, 1e-15);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_TRUE(std::isfinite(e.last_estimate()));
    EXPECT_GT(e.gap(), 0.0);
  }
}

TEST(IntegrateGeometric, LongRangeMatchesAntiderivative) {
  const double k = 1000.0;
  const double v = integrate_geometric([](double t) { return std::pow(1.0 + t * t, 2); }, k);
  const double exact = k + 2.0 * k * k * k / 3.0 + std::pow(k, 5) / 5.0;
  EXPECT_NEAR(v / exact, 1.0, 1e-10);
}

TEST(IntegrateHalfline, ExponentialAndLogNormalMass) {
  EXPECT_NEAR(integrate_halfline([](double x) { return std::exp(-x); }), 1.0, 1e-10);
  auto ln_pdf = [](double x) {
    const double l = std::log(x);
    return std::exp(-l * l / 2.0) / (x * std::sqrt(2.0 * std::numbers::pi));
  };
  EXPECT_NEAR(integrate_halfline(ln_pdf), 1.0, 1e-10);
}

TEST(IntegrateHalfline, BoundedSupportWithJump) {
  const double v =
      integrate_halfline([](double x) { return x < 1.0 ? 2.0 * x : 0.0; }, 1e-10, {0.0, 1.0});
  EXPECT_NEAR(v, 1.0, 1e-10);
  const double w =
      integrate_halfline([](double x) { return x > 1.0 ? 1.0 / (x * x) : 0.0; }, 1e-10,
                         {1.0, std::numeric_limits<double>::infinity()});
  EXPECT_NEAR(w, 1.0, 1e-10);
}

TEST(IntegrateHalfline, DivergentIntegralThrows) {
  EXPECT_THROW(integrate_halfline([](double x) { return 1.0 / (1.0 + x); }), NumericalError);
}

TEST(SupOnInterval, FindsInteriorMaximum) {
  const double v = sup_on_interval([](double t) { return -(t - 0.3137) * (t - 0.3137) + 2.0; }, 1.0);
  EXPECT_NEAR(v, 2.0, 1e-15);
  EXPECT_NEAR(sup_on_interval([](double t) { return t * t; }, 3.0), 9.0, 1e-15);
}

TEST(LsSlope, RecoversExactLine) {
  std::vector<double> x{1, 2, 3, 4};
  std::vector<double> y{5, 7, 9, 11};
  EXPECT_NEAR(ls_slope(x, y), 2.0, 1e-14);
  std::vector<double> one{1.0};
  EXPECT_THROW(ls_slope(one, one), PreconditionError);
}
