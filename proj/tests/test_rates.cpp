#include <mgof/maxtest.hpp>
#include <mgof/rates.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace mgof;

namespace {

std::vector<double> decades(int lo, int hi) {
  std::vector<double> out;
  for (int e = lo; e <= hi; ++e) out.push_back(std::pow(10.0, e));
  return out;
}

double fitted_slope(const std::vector<double>& n, const std::vector<double>& y) {
  std::vector<double> ln, ly;
  for (std::size_t i = 0; i < n.size(); ++i) {
    ln.push_back(std::log(n[i]));
    ly.push_back(std::log(y[i]));
  }
  return numerics::ls_slope(ln, ly);
}

}  // namespace

TEST(Rho2, BiasAndVarianceBranches) {
  const RegularityClass reg{SmoothnessKind::Ordinary, 2.0, 1.0};
  const auto model = model_penalty({SmoothnessKind::Ordinary, 1.0}, 0.0);
  // tiny k: bias 1 / (1 + k^2)^2 ~ 1 dominates
  EXPECT_NEAR(rho2_k(reg, model, 1e-3, 1e6), 1.0 / std::pow(1.0 + 1e-6, 2), 1e-9);
  // huge k: variance dominates and grows
  EXPECT_GT(rho2_k(reg, model, 1e4, 1e3), rho2_k(reg, model, 10.0, 1e3));
}

TEST(Rho2, OverflowGivesInfinity) {
  const RegularityClass reg{SmoothnessKind::Super, 1.0, 1.0};
  const auto model = model_penalty({SmoothnessKind::Super, 2.0}, 0.0);
  EXPECT_TRUE(std::isinf(rho2_k(reg, model, 30.0, 100.0)));
}

TEST(KStar, OrdinaryOrdinarySlopesMatchTabulatedExponents) {
  const RegularityClass reg{SmoothnessKind::Ordinary, 2.0, 1.0};
  const ErrorSmoothness err{SmoothnessKind::Ordinary, 1.0};
  const auto model = model_penalty(err, 0.0);
  const auto ns = decades(3, 9);
  std::vector<double> ks, rs;
  for (double n : ns) {
    const auto best = k_star(reg, model, n);
    ks.push_back(best.k_star);
    rs.push_back(best.rho2_star);
  }
  EXPECT_NEAR(fitted_slope(ns, ks) / (2.0 / 13.0), 1.0, 0.15);
  EXPECT_NEAR(fitted_slope(ns, rs) / (-8.0 / 13.0), 1.0, 0.15);
}

TEST(KStar, SuperSmoothDensityOrdinaryErrorIsNearlyParametric) {
  const RegularityClass reg{SmoothnessKind::Super, 1.0, 1.0};
  const ErrorSmoothness err{SmoothnessKind::Ordinary, 1.0};
  const auto model = model_penalty(err, 0.0);
  const auto ns = decades(3, 9);
  std::vector<double> rs;
  std::vector<double> pred;
  for (double n : ns) {
    rs.push_back(k_star(reg, model, n).rho2_star);
    pred.push_back(std::pow(std::log(n), 2.5) / n);  // (log n)^{(2 sigma + 1/2)/s} / n
  }
  EXPECT_NEAR(fitted_slope(ns, rs) / fitted_slope(ns, pred), 1.0, 0.15);
}

TEST(RateOrder, OrdinaryOrdinaryRow) {
  const RegularityClass reg{SmoothnessKind::Ordinary, 2.0, 1.0};
  const auto rows = rate_order(reg, {SmoothnessKind::Ordinary, 1.0}, 0.0, {1e6});
  EXPECT_NEAR(rows[0].k_pred, std::pow(1e6, 2.0 / 13.0), 1e-9);
  EXPECT_NEAR(rows[0].rho2_pred, std::pow(1e6, -8.0 / 13.0), 1e-15);
}

TEST(RateOrder, OrdinaryOrdinaryEdgeCases) {
  const RegularityClass reg{SmoothnessKind::Ordinary, 2.0, 1.0};
  const auto edge = rate_order(reg, {SmoothnessKind::Ordinary, 0.25}, -0.5, {1e4});
  EXPECT_NEAR(edge[0].rho2_pred, std::sqrt(std::log(1e4)) / 1e4, 1e-15);
  EXPECT_TRUE(std::isnan(edge[0].k_pred));
  const auto para = rate_order(reg, {SmoothnessKind::Ordinary, 0.25}, -0.9, {1e4});
  EXPECT_NEAR(para[0].rho2_pred, 1e-4, 1e-18);
}

TEST(RateOrder, OrdinarySuperAndSuperOrdinaryRows) {
  const double n = 1e8;
  const double ln = std::log(n);
  const auto os_ss = rate_order({SmoothnessKind::Ordinary, 2.0, 1.0},
                                {SmoothnessKind::Super, 0.5}, 0.0, {n});
  EXPECT_NEAR(os_ss[0].k_pred, std::pow(ln, 2.0), 1e-9);
  EXPECT_NEAR(os_ss[0].rho2_pred, std::pow(ln, -8.0), 1e-15);
  const auto ss_os = rate_order({SmoothnessKind::Super, 1.0, 1.0},
                                {SmoothnessKind::Ordinary, 1.0}, 0.0, {n});
  EXPECT_NEAR(ss_os[0].k_pred, ln, 1e-12);
  EXPECT_NEAR(ss_os[0].rho2_pred, std::pow(ln, 2.5) / n, 1e-18);
}

TEST(RateOrder, CollectionsInflateTheRadius) {
  const RegularityClass reg{SmoothnessKind::Super, 1.0, 1.0};
  const ErrorSmoothness err{SmoothnessKind::Ordinary, 1.0};
  const double n = 1e6;
  const double base = rate_order(reg, err, 0.0, {n})[0].rho2_pred;
  const double ln = std::log(n);
  EXPECT_NEAR(rate_order(reg, err, 0.0, {n}, CollectionRegime::Naive)[0].rho2_pred, ln * base, 1e-15);
  EXPECT_NEAR(rate_order(reg, err, 0.0, {n}, CollectionRegime::Geometric)[0].rho2_pred,
              std::sqrt(std::log(ln)) * base, 1e-15);
  EXPECT_NEAR(rate_order(reg, err, 0.0, {n}, CollectionRegime::LogLog)[0].rho2_pred,
              std::sqrt(std::log(std::log(ln))) * base, 1e-15);
  const auto os = rate_order({SmoothnessKind::Ordinary, 2.0, 1.0}, err, 0.0, {n},
                             CollectionRegime::Naive);
  EXPECT_NEAR(os[0].rho2_pred, std::pow(n / ln, -8.0 / 13.0), 1e-15);
}

TEST(RateOrder, UntabulatedCombinationsThrow) {
  const RegularityClass ss{SmoothnessKind::Super, 1.0, 1.0};
  EXPECT_THROW(rate_order(ss, {SmoothnessKind::Super, 1.0}, 0.0, {1e3}), PreconditionError);
  EXPECT_THROW(rate_order({SmoothnessKind::Ordinary, 2.0, 1.0}, {SmoothnessKind::Ordinary, 1.0},
                          0.0, {1e3}, CollectionRegime::LogLog),
               PreconditionError);
  EXPECT_THROW(rate_order(ss, {SmoothnessKind::Ordinary, 1.0}, 0.0, {}), PreconditionError);
  // ordinary smoothness requires s > a
  EXPECT_THROW(rate_order({SmoothnessKind::Ordinary, 1.0, 1.0}, {SmoothnessKind::Ordinary, 1.0},
                          2.0, {1e3}),
               PreconditionError);
}

TEST(ErrorSmoothness, FittedDecayOfParetoError) {
  // |M_{1/2}[pareto(2)](t)| = 1 / |1.5 - 2 pi i t| decays like t^{-1}
  const auto pareto = catalog::pareto(2.0);
  EXPECT_NEAR(ErrorSmoothness::fitted_exponent(pareto, 0.5, SmoothnessKind::Ordinary), 1.0, 0.05);
  EXPECT_NO_THROW((ErrorSmoothness{SmoothnessKind::Ordinary, 1.0}.validate(pareto, 0.5)));
  EXPECT_THROW((ErrorSmoothness{SmoothnessKind::Ordinary, 3.0}.validate(pareto, 0.5)),
               PreconditionError);
  // |M[LN(0,1)]| = exp(1/8 - 2 pi^2 t^2): super smooth of order 2
  EXPECT_NEAR(ErrorSmoothness::fitted_exponent(catalog::lognormal(0.0, 1.0), 0.5,
                                               SmoothnessKind::Super),
              2.0, 0.1);
}

TEST(Eta, Factors) {
  EXPECT_EQ(eta_k(1.0, 100.0, 1.0), 1.0);
  EXPECT_NEAR(eta_k(5000.0, 10.0, 1.0), 10.0, 1e-12);
  EXPECT_EQ(eta_K(10, 1.0, 1e6, 1.0, 2.0), 1.0);
  const double dk = delta_K(10);
  EXPECT_NEAR(eta_K(10, 200.0, 10.0, 1.0, 2.0), 20.0 * 10.0 / (10.0 * std::pow(dk, 4)), 1e-9);
}

TEST(SeparationConstant, BonferroniVersionIsLarger) {
  const RegularityClass reg{SmoothnessKind::Ordinary, 2.0, 1.0};
  const ModelConstants mc{2.0, 1.0, 2.46, 3.0, 3.0};
  const AlternativeClass alt{1.0, 1.0, 3.0};
  const double single = separation_constant(0.1, reg, mc, alt, false);
  const double L = 1.0 - std::log(0.1 / 8.0);
  EXPECT_NEAR(single,
              1.0 + 140.0 * L / 0.1 * 2.0 * 2.46 + 260.0 * L / 0.1 * 2.0 + 833934.0 * std::pow(L, 1.5) / 0.1,
              1e-6);
  EXPECT_GT(separation_constant(0.1, reg, mc, alt, true), single);
  EXPECT_THROW(separation_constant(1.0, reg, mc, alt, false), PreconditionError);
}

TEST(AdaptiveRadius, NoSmallerThanTheOracleRadius) {
  const RegularityClass reg{SmoothnessKind::Ordinary, 2.0, 1.0};
  const auto model = model_penalty({SmoothnessKind::Ordinary, 1.0}, 0.0);
  for (double n : {1e3, 1e5}) {
    const auto coll = build_collection(CollectionKind::Geometric, static_cast<std::size_t>(n));
    const auto ar = adaptive_radius(reg, coll, model, n);
    const auto oracle = k_star(reg, model, n);
    EXPECT_GE(ar.r2, oracle.rho2_star * 0.999);
    EXPECT_LE(rho2_collection(reg, coll, model, n), ar.r2 * (1.0 + 1e-12));
  }
}
