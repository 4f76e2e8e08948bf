#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace breuil;
using testutil::ctx_of;
using testutil::S;

namespace {

BreuilModP t4ii_module(const RingContext& ctx) {
  return BreuilModP{ctx, S("T1^2*T2^2", ctx), SeriesMatrix::diagonal(ctx, {S("T1^2", ctx), S("T2^2", ctx)}),
                    Certificate{SeriesMatrix::diagonal(ctx, {S("T2^2", ctx), S("T1^2", ctx)}), S("T1^2*T2^2", ctx)}};
}

bool same_module(const BreuilModP& a, const BreuilModP& b) {
  return a.A.same_terms(b.A) && a.cert.has_value() == b.cert.has_value() &&
         (!a.cert || (a.cert->B.same_terms(b.cert->B) && a.cert->f == b.cert->f));
}

}  // namespace

TEST(Module, T4iiCertifiedAndConnected) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto rep = validate(t4ii_module(ctx));
  EXPECT_TRUE(rep.certified);
  EXPECT_TRUE(rep.connected);
  EXPECT_TRUE(rep.exact);
}

TEST(Module, RankOneMultiplication) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto h = S("T1^3+T2^4", ctx);
  const auto rep = validate(rank_one_module(h, h));
  EXPECT_TRUE(rep.certified);
  EXPECT_TRUE(rep.connected);
  const auto etale = rank_one_module(h, S("1", ctx));
  EXPECT_TRUE(validate(etale).certified);
  EXPECT_FALSE(validate(etale).connected);
}

TEST(Module, AnnihilationRefuted) {
  const auto ctx = ctx_of(3, 2, 10);
  BreuilModP M{ctx, S("T1^3", ctx), SeriesMatrix::from_rows(ctx, {{S("T2", ctx)}}), std::nullopt};
  try {
    validate(M);
    FAIL() << "expected AnnihilationRefuted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AnnihilationRefuted);
  }
}

TEST(Module, BadCertificates) {
  const auto ctx = ctx_of(3, 2, 10);
  auto M = t4ii_module(ctx);
  M.cert->B = SeriesMatrix::identity(ctx, 2);
  EXPECT_THROW(validate(M), Error);
  auto N = t4ii_module(ctx);
  N.hbar = S("T1^3", ctx);  // f no longer divides hbar
  EXPECT_THROW(validate(N), Error);
}

TEST(Module, WithoutCertificateUsesSolver) {
  const auto ctx = ctx_of(3, 2, 10);
  auto M = t4ii_module(ctx);
  M.cert.reset();
  EXPECT_TRUE(validate(M).certified);
  EXPECT_THROW(dualize(M), Error);
}

TEST(Duality, Examples) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto D = dualize(t4ii_module(ctx));
  EXPECT_TRUE(D.A.same_terms(SeriesMatrix::diagonal(ctx, {S("T2^2", ctx), S("T1^2", ctx)})));
  const auto h = S("T1^2*T2^2", ctx);
  EXPECT_TRUE(dualize(rank_one_module(h, h)).A.same_terms(SeriesMatrix::identity(ctx, 1)));
}

TEST(Duality, InvolutionAndValidity) {
  const auto ctx = ctx_of(3, 2, 12);
  std::vector<BreuilModP> mods{t4ii_module(ctx)};
  for (const auto& kind : {"i", "ii", "iii"}) {
    T4Params P;
    P.kind = parse_t4_case(kind);
    P.t = S("T1+T2", ctx);
    P.u = S("T1", ctx);
    P.v = S("T2", ctx);
    P.a = P.b = P.c = S("1", ctx);
    const auto B = t4_build(P, ctx);
    mods.push_back(B.M1);
    mods.push_back(B.M2);
  }
  for (const auto& M : mods) {
    EXPECT_TRUE(same_module(dualize(dualize(M)), M));
    EXPECT_EQ(validate(dualize(M)).certified, validate(M).certified);
  }
}

TEST(Morphism, T4iExample) {
  const auto ctx = ctx_of(3, 2, 12);
  T4Params P;
  P.kind = T4Case::i;
  P.t = S("T2", ctx);
  P.u = S("T1", ctx);
  const auto B = t4_build(P, ctx);
  EXPECT_TRUE(check_morphism(B.alpha));
  EXPECT_TRUE(epi_on_punctured(B.alpha.U, B.M1, B.M2));
  EXPECT_FALSE(is_surjective(B.alpha.U));
}

TEST(Morphism, IdentityAndT4ii) {
  const auto ctx = ctx_of(3, 2, 10);
  const auto M = t4ii_module(ctx);
  const auto I = SeriesMatrix::identity(ctx, 2);
  EXPECT_TRUE(check_morphism(I, M, M));
  EXPECT_TRUE(epi_on_punctured(I, M, M));
  const auto tau = rank_one_module(M.hbar, S("T1^2*T2^2", ctx));
  EXPECT_TRUE(check_morphism(SeriesMatrix::row_vector(ctx, {S("T2", ctx), S("T1", ctx)}), M, tau));
  EXPECT_FALSE(check_morphism(SeriesMatrix::row_vector(ctx, {S("T1", ctx), S("T2", ctx)}), M, tau));
  EXPECT_THROW(check_morphism(I, M, tau), Error);
}

// Valid U: M1 -> M2 and V: M2 -> M3 compose to a valid V U.
TEST(Morphism, ClosedUnderComposition) {
  const auto ctx = ctx_of(3, 2, 12);
  const auto M1 = t4ii_module(ctx);
  const auto h = M1.hbar;
  const auto M2 = rank_one_module(h, h);
  const MorphismP U{M1, M2, SeriesMatrix::row_vector(ctx, {S("T2", ctx), S("T1", ctx)})};
  ASSERT_TRUE(check_morphism(U));
  // Endomorphisms of (h): scalars c with c^p = c, and on F_3 every constant.
  int checked = 0;
  for (int c = 0; c < 3; ++c) {
    const MorphismP V{M2, M2, SeriesMatrix::from_rows(ctx, {{TruncatedSeries::constant(ctx, c)}})};
    ASSERT_TRUE(check_morphism(V));
    EXPECT_TRUE(check_morphism(compose(V, U)));
    ++checked;
  }
  // And M1 -> M1 diagonal constants followed by U.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const MorphismP W{M1, M1, SeriesMatrix::diagonal(ctx, {TruncatedSeries::constant(ctx, a), TruncatedSeries::constant(ctx, b)})};
      if (!check_morphism(W)) continue;
      EXPECT_TRUE(check_morphism(compose(U, W)));
      ++checked;
    }
  EXPECT_GE(checked, 12);
}

TEST(Morphism, MuPAndCompositionWithT4) {
  const auto ctx = ctx_of(5, 2, 20);
  for (const auto& kind : {"i", "ii", "iii"}) {
    T4Params P;
    P.kind = parse_t4_case(kind);
    P.t = S("T2", ctx);
    P.u = S("T1", ctx);
    P.v = S("T2", ctx);
    P.a = S("1", ctx);
    P.b = S("2", ctx);
    P.c = S("3", ctx);
    const auto B = t4_build(P, ctx);
    const MorphismP id{B.M2, B.M2, SeriesMatrix::identity(B.M2.ctx, 1)};
    EXPECT_TRUE(check_morphism(compose(id, B.alpha)));
  }
}
