#include "oracles.hpp"

#include <mgof/density.hpp>
#include <mgof/mellin.hpp>
#include <mgof/rng.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace mgof;

namespace {

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Catalog, LogNormalMellinMatchesQuadratureOracle) {
  const auto d = catalog::lognormal(0.0, 1.0);
  for (double t : {-5.0, -1.3, 0.0, 0.7, 2.5, 5.0}) {
    const auto ref = oracle::mellin([](double x) { return oracle::lognormal_pdf(x); }, 0.5, t,
                                    -14.0, 14.0, 600);
    EXPECT_LE(std::abs(d.mellin(0.5, t) - ref), 1e-8 * std::abs(ref) + 1e-14) << "t = " << t;
  }
}

TEST(Catalog, ParetoMellinMatchesQuadratureOracle) {
  const auto d = catalog::pareto(2.0);
  for (double t : {-5.0, -0.4, 0.0, 1.1, 5.0}) {
    const auto ref = oracle::mellin(oracle::pareto2_pdf, 0.5, t, 0.0, 30.0, 1500);
    EXPECT_LT(rel_err(d.mellin(0.5, t), ref), 1e-8) << "t = " << t;
  }
}

TEST(Catalog, PowerLawMellinMatchesQuadratureOracle) {
  const auto d = catalog::powerlaw2x();
  for (double t : {-5.0, -2.0, 0.0, 0.3, 5.0}) {
    const auto ref = oracle::mellin(oracle::powerlaw_pdf, 0.5, t, -30.0, 0.0, 1500);
    EXPECT_LT(rel_err(d.mellin(0.5, t), ref), 1e-8) << "t = " << t;
  }
}

TEST(Catalog, UniformMellinClosedForm) {
  const auto d = catalog::uniform01();
  const auto ref = oracle::mellin([](double x) { return x < 1.0 ? 1.0 : 0.0; }, 0.5, 1.7,
                                  -40.0, 0.0, 2000);
  EXPECT_LT(rel_err(d.mellin(0.5, 1.7), ref), 1e-8);
}

TEST(Catalog, TransformAtZeroFrequencyIsTheMoment) {
  for (const auto& d : {catalog::lognormal(0.3, 0.5), catalog::pareto(3.0),
                        catalog::powerlaw2x(), catalog::uniform01()}) {
    for (double c : {0.25, 0.5, 0.9})
      EXPECT_NEAR(d.mellin(c, 0.0).real(), d.moment(c - 1.0), 1e-13) << d.name();
  }
}

TEST(Catalog, ConjugateSymmetry) {
  const auto d = catalog::lognormal(0.2, 1.5);
  const Complex a = d.mellin(0.5, 1.234);
  const Complex b = d.mellin(0.5, -1.234);
  EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-15);
}

TEST(Catalog, ProductMomentFactorisation) {
  // E[(XU)^{-1}] = E[X^{-1}] E[U^{-1}] = e^{1/2} / 2 for lognormal x pareto(2)
  const auto x = catalog::lognormal(0.0, 1.0);
  const auto u = catalog::pareto(2.0);
  EXPECT_NEAR(x.moment(-1.0) * u.moment(-1.0), std::exp(0.5) / 2.0, 1e-15);
}

TEST(Catalog, MomentsMatchQuadrature) {
  const auto p = catalog::pareto(2.0);
  EXPECT_NEAR(p.moment(-1.0), 0.5, 1e-15);
  EXPECT_TRUE(std::isinf(p.moment(1.0)));
  const auto ln = catalog::lognormal(0.0, 1.0);
  const double ref = oracle::integrate<double>(
      [](double u) { return std::exp(-2.0 * u) * std::exp(-u * u / 2.0) / std::sqrt(2.0 * oracle::pi); },
      -20.0, 20.0, 200);
  EXPECT_NEAR(ln.moment(-2.0), ref, 1e-12);
}

TEST(Catalog, WeightedSupClosedForms) {
  EXPECT_NEAR(catalog::pareto(2.0).weighted_sup(0.0), 1.0, 1e-15);
  EXPECT_NEAR(catalog::powerlaw2x().weighted_sup(0.0), 2.0, 1e-15);
  // lognormal: sup_x pdf(x) x^e = e^{(e-1)^2/2} / sqrt(2 pi) at mu = 0, sigma = 1
  EXPECT_NEAR(catalog::lognormal(0.0, 1.0).weighted_sup(0.0),
              std::exp(0.5) / std::sqrt(2.0 * std::numbers::pi), 1e-15);
}

TEST(Catalog, ParseResolvesSpecs) {
  EXPECT_EQ(catalog::parse("lognormal:0:1").name(), "lognormal:0:1");
  EXPECT_EQ(catalog::parse("pareto:2").name(), "pareto:2");
  EXPECT_EQ(catalog::parse("powerlaw2x").name(), "powerlaw2x");
  EXPECT_EQ(catalog::parse("uniform").name(), "uniform");
  EXPECT_NEAR(std::abs(catalog::parse("lognormal:0.5:2").mellin(0.5, 0.3) -
                       catalog::lognormal(0.5, 2.0).mellin(0.5, 0.3)),
              0.0, 1e-15);
}

TEST(Catalog, ParseRejectsBadSpecs) {
  EXPECT_THROW(catalog::parse("gamma:2"), DataError);
  EXPECT_THROW(catalog::parse("lognormal:x:1"), DataError);
  EXPECT_THROW(catalog::parse("lognormal:0:-1"), DataError);
  EXPECT_THROW(catalog::parse("pareto:0.5"), DataError);
  EXPECT_THROW(catalog::parse("powerlaw2x:3"), DataError);
}

TEST(Catalog, MissingClosedFormFallsBackToQuadrature) {
  MellinDensity::Parts parts;
  parts.name = "exp1";
  parts.pdf = [](double x) { return std::exp(-x); };
  const MellinDensity d(std::move(parts));
  EXPECT_FALSE(d.has_mellin());
  EXPECT_THROW(d.mellin(0.5, 0.0), PreconditionError);
  EXPECT_NEAR(d.moment(1.0), 1.0, 1e-9);                       // Gamma(2)
  EXPECT_NEAR(d.moment(-0.5), std::sqrt(std::numbers::pi), 1e-8);  // Gamma(1/2)
  EXPECT_TRUE(std::isinf(d.moment(-1.0)));
}

TEST(Samplers, OutputsArePositive) {
  Rng rng = make_stream(1, 0);
  for (const auto& d : {catalog::lognormal(0.0, 1.0), catalog::pareto(2.0),
                        catalog::powerlaw2x(), catalog::uniform01()})
    for (int i = 0; i < 10000; ++i) ASSERT_GT(d.sample(rng), 0.0) << d.name();
}

TEST(Samplers, KolmogorovSmirnovAgainstAnalyticCdfs) {
  // 1% critical value of the KS statistic: 1.628 / sqrt(n)
  const std::size_t n = 100000;
  const double crit = 1.628 / std::sqrt(static_cast<double>(n));
  struct Case {
    MellinDensity d;
    double (*cdf)(double);
  };
  const Case cases[] = {{catalog::lognormal(0.0, 1.0), oracle::lognormal_cdf},
                        {catalog::pareto(2.0), oracle::pareto2_cdf},
                        {catalog::powerlaw2x(), oracle::powerlaw_cdf}};
  std::uint64_t stream = 0;
  for (const auto& c : cases) {
    Rng rng = make_stream(7, stream++);
    std::vector<double> v(n);
    for (auto& x : v) x = c.d.sample(rng);
    EXPECT_LT(oracle::ks_statistic(v, c.cdf), crit) << c.d.name();
  }
}

TEST(Samplers, InverseMomentOfProductWithinFourStandardErrors) {
  const auto x = catalog::lognormal(0.0, 1.0);
  const auto u = catalog::pareto(2.0);
  Rng rng = make_stream(11, 0);
  const std::size_t n = 1000000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = x.sample(rng) * u.sample(rng);
    sum += 1.0 / y;
    sum2 += 1.0 / (y * y);
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  EXPECT_LT(std::abs(mean - std::exp(0.5) / 2.0), 4.0 * se);
}

TEST(Rng, StreamsDependOnlyOnSeedAndIndex) {
  Rng a = make_stream(42, 3);
  Rng b = make_stream(42, 3);
  Rng c = make_stream(42, 4);
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  Rng d = make_stream(43, 3);
  EXPECT_NE(va, d());
}

TEST(Rng, OpenUnitInterval) {
  Rng rng = make_stream(0, 0);
  for (int i = 0; i < 100000; ++i) {
    const double v = uniform_open01(rng);
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}
