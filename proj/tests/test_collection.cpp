#include <mgof/collection.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace mgof;

TEST(DeltaK, SpotValueAtTen) {
  EXPECT_NEAR(1.0 / delta_K(10), 1.8173015965970112, 1e-14);
  EXPECT_NEAR(1.0 / delta_K(10), 1.82, 5e-3);
  EXPECT_EQ(delta_K(1), 1.0);
  EXPECT_THROW(delta_K(0), PreconditionError);
}

TEST(DeltaK, DecreasesWithSize) {
  double prev = 1.0;
  for (std::size_t s = 2; s < 5000; s *= 3) {
    EXPECT_LT(delta_K(s), prev);
    prev = delta_K(s);
  }
}

TEST(Collections, NaiveCoversOneToNSquared) {
  const auto c = build_collection(CollectionKind::Naive, 20);
  EXPECT_EQ(c.size(), 400u);
  EXPECT_EQ(c.members.front(), 1.0);
  EXPECT_EQ(c.members.back(), 400.0);
  EXPECT_FALSE(c.truncated);
}

TEST(Collections, NaiveIsCapped) {
  const auto c = build_collection(CollectionKind::Naive, 1000);
  EXPECT_EQ(c.size(), kNaiveCap);
  EXPECT_TRUE(c.truncated);
}

TEST(Collections, GeometricPowersOfTwo) {
  // n = 100: log(10^4) = 9.21, so j runs to 9
  const auto c = build_collection(CollectionKind::Geometric, 100);
  ASSERT_EQ(c.size(), 10u);
  for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c.members[j], std::ldexp(1.0, static_cast<int>(j)));
  // base two: log2(10^4) = 13.3
  EXPECT_EQ(build_collection(CollectionKind::Geometric, 100, 1.0, LogBase::Two).size(), 14u);
}

TEST(Collections, LogLog) {
  // n = 10^6: log log n = 2.626, so with m = 1 the exponents are 0, 1, 2
  const auto c = build_collection(CollectionKind::LogLog, 1000000, 1.0);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(build_collection(CollectionKind::LogLog, 1000000, 2.0).size(), 2u);
  // log log 2 < 0
  EXPECT_THROW(build_collection(CollectionKind::LogLog, 2, 1.0), PreconditionError);
}

TEST(Collections, ExplicitIsSortedAndValidated) {
  const auto c = explicit_collection({1.4, 0.5, 1.0});
  EXPECT_EQ(c.members, (std::vector<double>{0.5, 1.0, 1.4}));
  EXPECT_THROW(explicit_collection({1.0, 1.0}), PreconditionError);
  EXPECT_THROW(explicit_collection({-1.0}), PreconditionError);
  EXPECT_THROW(explicit_collection({}), PreconditionError);
}

TEST(Collections, ParseSpecs) {
  EXPECT_EQ(parse_collection("naive", 10).size(), 100u);
  EXPECT_EQ(parse_collection("geometric", 100).size(), 10u);
  EXPECT_EQ(parse_collection("loglog:1", 1000000).size(), 3u);
  const auto e = parse_collection("explicit:0.5,0.6,0.7", 100);
  EXPECT_EQ(e.members, (std::vector<double>{0.5, 0.6, 0.7}));
  EXPECT_THROW(parse_collection("explicit:0.5,x", 100), DataError);
  EXPECT_THROW(parse_collection("fibonacci", 100), DataError);
}
