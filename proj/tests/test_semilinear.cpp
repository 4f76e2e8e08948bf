#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace breuil;
using testutil::ctx_of;
using testutil::S;

namespace {

CounterexampleBundle case_i(int p, const char* t, const char* u, int N = 12) {
  const auto ctx = ctx_of(p, 2, N);
  T4Params P;
  P.kind = T4Case::i;
  P.t = S(t, ctx);
  P.u = S(u, ctx);
  return t4_build(P, ctx);
}

}  // namespace

TEST(Matrix, TwistExamples) {
  const auto ctx = ctx_of(3, 2, 12);
  const auto U = SeriesMatrix::row_vector(ctx, {S("T2", ctx), S("T1", ctx), S("T1*T2", ctx)});
  EXPECT_TRUE(twist(U).same_terms(SeriesMatrix::row_vector(ctx, {S("T2^3", ctx), S("T1^3", ctx), S("T1^3*T2^3", ctx)})));
  EXPECT_TRUE(twist(SeriesMatrix::identity(ctx, 3)).same_terms(SeriesMatrix::identity(ctx, 3)));
}

TEST(Matrix, ShapeErrors) {
  const auto ctx = ctx_of(3, 2, 6);
  EXPECT_THROW(SeriesMatrix::identity(ctx, 2) * SeriesMatrix::identity(ctx, 3), Error);
  EXPECT_THROW(SeriesMatrix::identity(ctx, 2) + SeriesMatrix::identity(ctx, 3), Error);
}

TEST(Annihilation, Examples) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto A = SeriesMatrix::diagonal(ctx, {S("T1^2", ctx), S("T2^2", ctx)});
  EXPECT_TRUE(coker_annihilated_by(A, S("T1^2*T2^2", ctx)).certified());
  EXPECT_TRUE(coker_annihilated_by(SeriesMatrix::identity(ctx, 3), S("T1+T2^5", ctx)).certified());
  const auto r = coker_annihilated_by(SeriesMatrix::from_rows(ctx, {{S("T1", ctx)}}), S("T2", ctx));
  ASSERT_FALSE(r.certified());
  EXPECT_EQ(r.refuted_degree, 1);
}

TEST(Annihilation, SolutionsMultiplyBack) {
  const auto B = case_i(3, "T2", "T1");
  const auto r = coker_annihilated_by(B.M1.A, B.M1.cert->f, 10);
  ASSERT_TRUE(r.certified());
  ASSERT_EQ(r.solutions.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    auto e = SeriesMatrix::zero(B.M1.ctx, 3, 1);
    e(i, 0) = B.M1.cert->f;
    EXPECT_TRUE((B.M1.A * r.solutions[i]).equal_through(e, 10));
  }
}

TEST(FiniteLength, Examples) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto U = SeriesMatrix::row_vector(ctx, {S("T2", ctx), S("T1", ctx), S("T1*T2", ctx)});
  const auto r = coker_finite_length(U);
  ASSERT_TRUE(r.finite());
  EXPECT_EQ(r.bound, 1);
  const auto id = coker_finite_length(SeriesMatrix::identity(ctx, 2));
  ASSERT_TRUE(id.finite());
  EXPECT_EQ(id.bound, 0);
  const auto t1 = coker_finite_length(SeriesMatrix::from_rows(ctx, {{S("T1", ctx)}}));
  EXPECT_FALSE(t1.finite());
  EXPECT_EQ(t1.bound, 5);
}

TEST(FiniteLength, PowersOfMaximalIdeal) {
  const auto ctx = ctx_of(2, 2, 16);
  // (T1^a, T2^b) has colength a b and r^{a+b-1} inside it.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const auto U = SeriesMatrix::row_vector(ctx, {TruncatedSeries::monomial(ctx, Monomial::of({a, 0})),
                                                    TruncatedSeries::monomial(ctx, Monomial::of({0, b}))});
      const auto r = coker_finite_length(U);
      ASSERT_TRUE(r.finite());
      EXPECT_EQ(r.bound, a + b - 1);
    }
}

TEST(Surjective, Examples) {
  const auto ctx = ctx_of(3, 2, 6);
  EXPECT_TRUE(is_surjective(SeriesMatrix::from_rows(ctx, {{S("1+T1", ctx)}})));
  EXPECT_FALSE(is_surjective(SeriesMatrix::row_vector(ctx, {S("T1", ctx), S("T2", ctx)})));
  EXPECT_FALSE(is_surjective(case_i(3, "T2", "T1").M1.A));
}

TEST(Nilpotent, Examples) {
  const auto ctx = ctx_of(3, 2, 6);
  EXPECT_TRUE(nilpotent_mod_maximal(SeriesMatrix::from_rows(ctx, {{S("T1", ctx)}})));
  EXPECT_FALSE(nilpotent_mod_maximal(SeriesMatrix::from_rows(ctx, {{S("1", ctx)}})));
  EXPECT_TRUE(nilpotent_mod_maximal(case_i(3, "T2", "T1").M1.A));
  // Strictly upper triangular constants: nilpotent but nonzero mod r.
  EXPECT_TRUE(nilpotent_mod_maximal(SeriesMatrix::from_rows(ctx, {{S("0", ctx), S("1", ctx)}, {S("0", ctx), S("0", ctx)}})));
  EXPECT_FALSE(nilpotent_mod_maximal(SeriesMatrix::from_rows(ctx, {{S("0", ctx), S("1", ctx)}, {S("1", ctx), S("0", ctx)}})));
}

TEST(Nilpotent, TwistedProductOverF4) {
  // A0 = [[0, 1], [w, 0]] over F_4; sigma(A0) A0 = diag(w^2, w) is invertible.
  const auto ctx = ctx_of(2, 2, 4, 2);
  EXPECT_FALSE(nilpotent_mod_maximal(SeriesMatrix::from_rows(ctx, {{S("0", ctx), S("1", ctx)}, {S("(w)", ctx), S("0", ctx)}})));
}
