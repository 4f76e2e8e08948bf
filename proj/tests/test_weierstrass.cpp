#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace breuil;
using testutil::ctx_of;
using testutil::S;

namespace {

void expect_recomposes(const TruncatedSeries& f) {
  const auto W = weierstrass_preparation(f);
  EXPECT_EQ(ord(W.unit), OrderResult::known(0));
  EXPECT_EQ(static_cast<int>(W.coefficients.size()), W.e);
  for (const auto& a : W.coefficients) EXPECT_TRUE(a.constant_term().is_zero());
  const auto back = W.unit * W.polynomial();
  EXPECT_GE(back.prec(), f.prec());
  EXPECT_TRUE(back.equal_through(f, f.prec())) << to_string(back) << " vs " << to_string(f);
}

}  // namespace

TEST(Weierstrass, AlreadyPrepared) {
  const auto ctx = ctx_of(3, 2, 6);
  const auto W = weierstrass_preparation(S("T1^2", ctx));
  EXPECT_EQ(W.e, 2);
  EXPECT_EQ(W.unit, S("1", ctx));
  EXPECT_TRUE(W.coefficients[0].is_zero());
  EXPECT_TRUE(W.coefficients[1].is_zero());
}

TEST(Weierstrass, UnitTimesT1) {
  const auto ctx = ctx_of(3, 2, 6);
  const auto W = weierstrass_preparation(S("T1*(1+T2)", ctx));
  EXPECT_EQ(W.e, 1);
  EXPECT_EQ(W.unit, S("1+T2", ctx));
  EXPECT_TRUE(W.coefficients[0].is_zero());
}

TEST(Weierstrass, MixedExample) {
  expect_recomposes(S("T1^2+T1*T2+T2^3", ctx_of(3, 2, 6)));
}

TEST(Weierstrass, RejectsUnnormalized) {
  EXPECT_THROW(weierstrass_preparation(S("T2^2+T1*T2", ctx_of(3, 2, 6))), Error);
}

TEST(Weierstrass, RandomNormalized) {
  std::mt19937_64 rng(21);
  int done = 0;
  for (int p : {2, 3, 5}) {
    const auto ctx = ctx_of(p, 2, 9);
    for (int i = 0; i < 60; ++i) {
      auto f = testutil::random_series(rng, ctx, 1, 9, 0.4);
      if (!ord(f).is_known() || !is_normalized(f)) continue;
      expect_recomposes(f);
      ++done;
    }
  }
  EXPECT_GT(done, 40);
}

TEST(Weierstrass, AfterShear) {
  std::mt19937_64 rng(22);
  const auto ctx = ctx_of(5, 2, 8);
  for (int i = 0; i < 30; ++i) {
    const auto f = testutil::random_series(rng, ctx, 2, 8, 0.4);
    if (!ord(f).is_known()) continue;
    FieldElement lambda;
    try {
      lambda = find_normalizing_lambda(f);
    } catch (const Error&) {
      continue;
    }
    const auto g = shear(f, lambda);
    ASSERT_TRUE(is_normalized(g));
    expect_recomposes(g);
  }
}
