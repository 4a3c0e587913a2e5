#include <gtest/gtest.h>

#include "charkit/oracle.hpp"
#include "charkit/polyring.hpp"

using namespace charkit;

namespace {
Weight W(const char* s) { return Weight::parse(s); }
}  // namespace

TEST(Freudenthal, Minuscule) {
  auto ws = freudenthal(W("0000001"));
  ASSERT_EQ(ws.mults.size(), 1u);
  EXPECT_EQ(ws.mults.at(W("0000001")), 1);
  EXPECT_EQ(ws.orbit_sizes.at(W("0000001")), 56u);
  EXPECT_EQ(ws.total(), 56);
  EXPECT_EQ(ws.all_weights().size(), 56u);
}

TEST(Freudenthal, Trivial) {
  auto ws = freudenthal(Weight{});
  ASSERT_EQ(ws.mults.size(), 1u);
  EXPECT_EQ(ws.mults.at(Weight{}), 1);
  EXPECT_EQ(ws.total(), 1);
}

TEST(Freudenthal, Adjoint) {
  auto ws = freudenthal(W("1000000"));
  ASSERT_EQ(ws.mults.size(), 2u);
  EXPECT_EQ(ws.mults.at(W("1000000")), 1);
  EXPECT_EQ(ws.mults.at(Weight{}), 7);
  EXPECT_EQ(ws.orbit_sizes.at(W("1000000")), 126u);
  EXPECT_EQ(ws.total(), 133);
}

TEST(Freudenthal, TotalsMatchWeylDimension) {
  for (int i = 1; i <= kRank; ++i) EXPECT_EQ(freudenthal(Weight::fundamental(i)).total(), weyl_dim(Weight::fundamental(i)));
  for (const char* s : {"0000002", "1000001", "0000003", "0000011", "2000000", "0100001"})
    EXPECT_EQ(freudenthal(W(s)).total(), weyl_dim(W(s))) << s;
}

TEST(Freudenthal, Refusal) {
  EXPECT_THROW(freudenthal(W("0003000")), OracleRefusal);
  EXPECT_THROW(freudenthal(W("0000002"), 100), OracleRefusal);
}

TEST(Orbit, DominantRepresentative) {
  Weight mu = W("0000001");
  for (const auto& x : weyl_orbit(mu)) EXPECT_EQ(dominant_representative(x), mu);
  EXPECT_EQ(weyl_orbit(Weight{}).size(), 1u);
}

TEST(Torus, FundamentalIdentity) {
  auto r = torus_check(W("0000001"), MultiPoly::variable(7), 20, 1);
  EXPECT_LT(r.max_deviation, 1e-8);
  EXPECT_EQ(r.trials, 20);
}

TEST(Torus, PublishedCharacters) {
  EXPECT_LT(torus_check(W("0000002"), parse_poly("z7^2 - z6 - z1 - 1")).max_deviation, 1e-8);
  EXPECT_LT(torus_check(W("1000001"), parse_poly("z1*z7 - z2 - z7")).max_deviation, 1e-8);
}

TEST(Torus, DetectsWrongCharacter) {
  EXPECT_GT(torus_check(W("0000002"), parse_poly("z7^2 - z6 - z1")).max_deviation, 0.5);
  EXPECT_GT(torus_check(W("1000001"), parse_poly("z1*z7 - z2")).max_deviation, 1e-3);
}

TEST(Torus, SeedIsReproducible) {
  auto chi = parse_poly("z7^2 - z6 - z1 - 1");
  EXPECT_EQ(torus_check(W("0000002"), chi, 5, 77).max_deviation, torus_check(W("0000002"), chi, 5, 77).max_deviation);
}
