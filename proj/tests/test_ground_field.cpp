#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace breuil;

namespace {

// Independent check: a monic polynomial over F_p of degree m is irreducible
// iff no monic polynomial of degree 1..m/2 divides it (schoolbook division).
bool brute_irreducible(std::uint32_t p, std::vector<std::uint32_t> f) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= m; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> g(k + 1);
      std::uint64_t x = c;
      for (int i = 0; i < k; ++i, x /= p) g[i] = static_cast<std::uint32_t>(x % p);
      g[k] = 1;
      auto r = f;
      for (int i = m; i >= k; --i) {
        const auto t = r[i];
        for (int j = 0; j <= k; ++j) r[i - k + j] = static_cast<std::uint32_t>((r[i - k + j] + (p - t) * g[j]) % p);
      }
      bool zero = true;
      for (int i = 0; i < k; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST(GroundField, PrimeFieldArithmetic) {
  const auto F = make_field(3);
  EXPECT_EQ(F->order(), 3u);
  EXPECT_EQ(F->add(F->from_int(2), F->from_int(2)), F->from_int(1));
  EXPECT_EQ(F->inv(F->from_int(2)), F->from_int(2));
  EXPECT_EQ(F->frobenius(F->from_int(2)), F->from_int(2));
  EXPECT_EQ(F->from_int(-1), F->from_int(2));
}

TEST(GroundField, F4Generator) {
  const auto F = make_field(2, 2);
  EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const auto w = F->generator();
  EXPECT_EQ(F->mul(w, w), F->add(w, F->one()));
  EXPECT_EQ(F->frobenius(w), F->add(w, F->one()));
  EXPECT_EQ(F->frobenius(F->frobenius(w)), w);
}

TEST(GroundField, F9ModulusIsIrreducible) {
  const auto F = make_field(3, 2);
  EXPECT_EQ(F->order(), 9u);
  EXPECT_TRUE(brute_irreducible(3, F->modulus()));
}

TEST(GroundField, DefaultModuliAreIrreducible) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
    const auto F = make_field(p, m);
    EXPECT_TRUE(brute_irreducible(p, F->modulus())) << p << "^" << m;
  }
}

TEST(GroundField, Printing) {
  const auto F = make_field(3, 2);
  const auto x = F->add(F->mul(F->from_int(2), F->generator()), F->one());
  EXPECT_EQ(F->to_string(x), "2*w+1");
  EXPECT_EQ(make_field(5)->to_string(make_field(5)->from_int(7)), "2");
}

TEST(GroundField, Errors) {
  EXPECT_THROW(make_field(4), Error);
  EXPECT_THROW(make_field(2, 17), Error);
  EXPECT_THROW(make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);  // x^2+1 = (x+1)^2
  EXPECT_THROW(make_field(3)->inv(FieldElement{0}), Error);
}

// Frobenius is a field automorphism; exhaustive for q <= 25.
TEST(GroundField, FrobeniusIsAutomorphism) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    const auto F = make_field(p, m);
    const auto q = F->order();
    for (std::uint32_t a = 0; a < q; ++a) {
      auto x = FieldElement{a};
      for (std::uint32_t k = 0; k < m; ++k) x = F->frobenius(x);
      ASSERT_EQ(x, FieldElement{a});
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElement A{a}, B{b};
        ASSERT_EQ(F->frobenius(F->add(A, B)), F->add(F->frobenius(A), F->frobenius(B)));
        ASSERT_EQ(F->frobenius(F->mul(A, B)), F->mul(F->frobenius(A), F->frobenius(B)));
      }
    }
  }
}

TEST(GroundField, FieldAxiomsSampled) {
  const auto F = make_field(2, 4);
  for (std::uint32_t a = 0; a < 16; ++a) {
    const FieldElement A{a};
    if (!A.is_zero()) EXPECT_EQ(F->mul(A, F->inv(A)), F->one());
    for (std::uint32_t b = 0; b < 16; ++b)
      for (std::uint32_t c = 0; c < 16; ++c) {
        const FieldElement B{b}, C{c};
        ASSERT_EQ(F->mul(A, F->add(B, C)), F->add(F->mul(A, B), F->mul(A, C)));
      }
  }
}

TEST(GroundField, PowerOrderAndRoots) {
  const auto F = make_field(5);
  const auto els = F->elements_in_power_order();
  EXPECT_EQ(els.size(), 5u);
  EXPECT_EQ(els.front(), F->zero());
  const auto r = F->root(F->from_int(4), 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(F->mul(*r, *r), F->from_int(4));
  EXPECT_FALSE(F->root(F->from_int(2), 2).has_value());
}

TEST(GroundField, EmbeddingIsHomomorphism) {
  const auto small = make_field(2, 2), big = make_field(2, 4);
  const FieldEmbedding e(small, big);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      const FieldElement A{a}, B{b};
      EXPECT_EQ(e(small->add(A, B)), big->add(e(A), e(B)));
      EXPECT_EQ(e(small->mul(A, B)), big->mul(e(A), e(B)));
    }
  EXPECT_THROW(FieldEmbedding(make_field(2, 3), big), Error);
}
