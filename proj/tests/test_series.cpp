#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace breuil;
using testutil::ctx_of;
using testutil::S;

TEST(Parse, Examples) {
  const auto ctx = ctx_of(3, 2, 8);
  const auto f = S("T1^2*T2 + 2*T1", ctx);
  EXPECT_EQ(f.term_count(), 2u);
  EXPECT_EQ(f.coefficient(Monomial::of({2, 1})), ctx.k().from_int(1));
  EXPECT_EQ(f.coefficient(Monomial::of({1, 0})), ctx.k().from_int(2));
  EXPECT_TRUE(S("0", ctx).is_zero());
  EXPECT_TRUE(S("T1^2 + 2*T1^2", ctx).is_zero());
  EXPECT_EQ(S("(T1*T2)^2", ctx), S("T1^2*T2^2", ctx));
  EXPECT_EQ(S("T", ctx_of(3, 1, 4)), TruncatedSeries::variable(ctx_of(3, 1, 4), 0));
}

TEST(Parse, Errors) {
  const auto ctx = ctx_of(3, 2, 8);
  EXPECT_THROW(S("T3", ctx), Error);
  EXPECT_THROW(S("T1 +", ctx), Error);
  EXPECT_THROW(S("T", ctx), Error);
  EXPECT_THROW(S("x", ctx), Error);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int m : {1, 2}) {
      const auto ctx = ctx_of(p, 2, 7, m);
      for (int i = 0; i < 20; ++i) {
        const auto f = testutil::random_series(rng, ctx, 0, 7);
        EXPECT_EQ(S(to_string(f).c_str(), ctx), f) << to_string(f);
      }
    }
  }
}

TEST(Series, Multiplication) {
  const auto ctx = ctx_of(3, 2, 3);
  EXPECT_EQ(to_string(S("T1", ctx) * S("T2", ctx)), "T1*T2");
  EXPECT_EQ(S("1+T1", ctx) * S("1-T1", ctx), S("1+2*T1^2", ctx));
  EXPECT_EQ(S("T1+T2", ctx).pow(3), S("T1^3+T2^3", ctx));
}

TEST(Series, PrecisionTracking) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto f = S("1+T1", ctx).truncated(4);
  const auto g = S("T1^2", ctx);
  EXPECT_EQ(f.prec(), 4);
  EXPECT_EQ((f + g).prec(), 4);
  EXPECT_EQ((f * g).prec(), 4);
  EXPECT_EQ(multiply_sharp(f, g).prec(), 6);
  EXPECT_EQ(frobenius_sigma(f).prec(), std::min(10, 3 * 4 + 2));
}

TEST(Series, InvertUnit) {
  const auto ctx = ctx_of(3, 2, 2);
  EXPECT_EQ(invert_unit(S("1", ctx)), S("1", ctx));
  EXPECT_EQ(invert_unit(S("1+T1", ctx)), S("1-T1+T1^2", ctx));
  EXPECT_EQ(invert_unit(S("2", ctx)), S("2", ctx));
  EXPECT_THROW(invert_unit(S("T1", ctx)), Error);
}

TEST(Series, OrderAndInitialForm) {
  const auto ctx = ctx_of(3, 2, 8);
  EXPECT_EQ(ord(S("T1^2*T2^2", ctx)), OrderResult::known(4));
  EXPECT_EQ(ord(TruncatedSeries::zero(ctx)), OrderResult::above(8));
  EXPECT_EQ(initial_form(S("T1^2+T1*T2+T2^3", ctx)).as_series(), S("T1^2+T1*T2", ctx));
  EXPECT_EQ(initial_form(S("T1^2+T1*T2+T2^3", ctx)).degree, 2);
}

TEST(Series, Frobenius) {
  const auto ctx = ctx_of(3, 2, 8);
  EXPECT_EQ(frobenius_sigma(S("T1+T2", ctx)), S("T1^3+T2^3", ctx));
  EXPECT_EQ(frobenius_sigma(S("2", ctx)), S("2", ctx));
  EXPECT_EQ(frobenius_sigma(S("2*T1*T2", ctx)), S("2*T1^3*T2^3", ctx));
  const auto c4 = ctx_of(2, 1, 6, 2);
  EXPECT_EQ(frobenius_sigma(S("(w)*T", c4)), S("(w+1)*T^2", c4));
}

TEST(Membership, Examples) {
  const auto ctx = ctx_of(3, 2, 8);
  const std::vector<Monomial> gens{Monomial::of({3, 0}), Monomial::of({0, 3}), Monomial::of({2, 2})};
  EXPECT_TRUE(monomial_ideal_membership(S("T1^3", ctx), gens).is_in());
  EXPECT_TRUE(monomial_ideal_membership(S("T1^2*T2^2", ctx), gens).is_in());
  const auto r = monomial_ideal_membership(S("T1^2", ctx), gens);
  ASSERT_TRUE(r.is_not_in());
  EXPECT_EQ(*r.witness, Monomial::of({2, 0}));
}

// Never UnknownAtPrecision once prec >= 2p-3.
TEST(Membership, DecidedAtBound) {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5}) {
    const int bound = std::max(1, 2 * p - 3);
    const auto ctx = ctx_of(p, 2, bound);
    for (int i = 0; i < 100; ++i) {
      const auto f = testutil::random_series(rng, ctx, 1, bound, 0.2);
      const auto r = monomial_ideal_membership(f, lemma2_ideal(p));
      EXPECT_NE(r.kind, MembershipResult::Kind::UnknownAtPrecision) << to_string(f);
    }
  }
  const auto low = ctx_of(5, 2, 5);
  EXPECT_EQ(monomial_ideal_membership(TruncatedSeries::zero(low), lemma2_ideal(5)).kind,
            MembershipResult::Kind::UnknownAtPrecision);
}

TEST(Shear, Examples) {
  const auto ctx = ctx_of(3, 2, 6);
  const auto one = ctx.k().one();
  EXPECT_EQ(shear(S("T2", ctx), one), S("T2+T1", ctx));
  EXPECT_EQ(find_normalizing_lambda(S("T1^2", ctx)), ctx.k().zero());
  EXPECT_EQ(find_normalizing_lambda(S("T2^2", ctx)), one);
  EXPECT_EQ(swap_variables(S("T1^2*T2", ctx)), S("T1*T2^2", ctx));
}

TEST(Shear, NoSlopeInField) {
  // T1 T2 (T1+T2): every slope of F_2 is a root of F(1, x) = x(1+x), and T1 | F.
  const auto ctx = ctx_of(2, 2, 6);
  EXPECT_THROW(find_normalizing_lambda(S("T1^2*T2+T1*T2^2", ctx)), Error);
}

TEST(Properties, SigmaIsRingHomomorphism) {
  std::mt19937_64 rng(3);
  for (int p : {2, 3, 5}) {
    const auto ctx = ctx_of(p, 2, 12);
    for (int i = 0; i < 30; ++i) {
      const auto f = testutil::random_series(rng, ctx, 0, 4).truncated(4);
      const auto g = testutil::random_series(rng, ctx, 0, 4).truncated(4);
      const auto sum = frobenius_sigma(f + g), sums = frobenius_sigma(f) + frobenius_sigma(g);
      EXPECT_TRUE(sum.equal_through(sums, std::min(sum.prec(), sums.prec())));
      const auto prod = frobenius_sigma(f * g), prods = frobenius_sigma(f) * frobenius_sigma(g);
      EXPECT_TRUE(prod.equal_through(prods, std::min(prod.prec(), prods.prec())));
    }
  }
}

TEST(Properties, OrderIsAdditive) {
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5}) {
    const auto ctx = ctx_of(p, 2, 12);
    for (int i = 0; i < 50; ++i) {
      const auto f = testutil::random_series(rng, ctx, 1, 5), g = testutil::random_series(rng, ctx, 1, 5);
      const auto of = ord(f), og = ord(g);
      if (!of.is_known() || !og.is_known() || of.value + og.value > 12) continue;
      EXPECT_EQ(ord(f * g), OrderResult::known(of.value + og.value));
    }
  }
}

TEST(Properties, ShearIsInvolutiveAutomorphism) {
  std::mt19937_64 rng(9);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    const auto ctx = ctx_of(p, 2, 8, m);
    const auto& F = ctx.k();
    for (int i = 0; i < 20; ++i) {
      const auto f = testutil::random_series(rng, ctx, 0, 8), g = testutil::random_series(rng, ctx, 0, 8);
      for (const auto lambda : F.elements_in_power_order()) {
        EXPECT_EQ(shear(shear(f, lambda), F.neg(lambda)), f);
        EXPECT_EQ(shear(f * g, lambda), shear(f, lambda) * shear(g, lambda));
      }
    }
  }
}
