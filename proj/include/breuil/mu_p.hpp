#pragma once

// The Breuil module of mu_p over k[[T]] and morphisms into it from rank-1
// modules: solutions of g a = sigma(a) T^{p-1}.

#include <optional>
#include <vector>

#include "breuil/breuil_module.hpp"

namespace breuil {

/// Rank 1, A = (T^e), certificate ((1), T^e), over k[[T]].
inline BreuilModP mu_p_module(const RingContext& ctx, int e) {
  if (ctx.d != 1) throw Error(ErrorCode::UnsupportedDimension, "mu_p lives over k[[T]]");
  const auto Te = TruncatedSeries::monomial(ctx, Monomial::variable(0, e));
  return rank_one_module(Te, Te);
}

struct P11Solution {
  int ord_a = 0;
  FieldPtr field;      // may extend the field of g
  TruncatedSeries g;   // g over `field`
  TruncatedSeries a;
  int verified_through = 0;
};

/// Solves g a = sigma(a) T^{p-1} in k[[T]], with a != 0.
///
/// Comparing orders gives ord(g) = (p-1)(ord(a)+1), so ord(a) is forced. With
/// g = T^{ord g} g0 and a = T^j a0 the equation becomes g0 a0 = sigma(a0):
/// the constant term needs c0^{p-1} = g0(0), which may call for a larger
/// field, and the higher coefficients follow by recursion. Throws NoMorphism
/// when the order equation has no solution with ord(g) <= e.
inline std::vector<P11Solution> p11_solve(const TruncatedSeries& g, int e) {
  const auto& ctx0 = g.ctx();
  if (ctx0.d != 1) throw Error(ErrorCode::UnsupportedDimension, "p11 works over k[[T]]");
  const int p = ctx0.p();
  const auto o = ord(g);
  if (!o.is_known()) throw Error(ErrorCode::OrderUnknown, "g vanishes through degree " + std::to_string(g.prec()));
  const int og = o.value;
  if (og > e) throw Error(ErrorCode::NoMorphism, "ord(g) = " + std::to_string(og) + " exceeds e = " + std::to_string(e));
  if (og % (p - 1) != 0 || og / (p - 1) < 1)
    throw Error(ErrorCode::NoMorphism, "ord(g) = " + std::to_string(og) + " is not (p-1)(ord(a)+1) for any ord(a) >= 0");
  const int j = og / (p - 1) - 1;

  // Smallest extension of k containing a (p-1)-th root of g0(0).
  const auto lead = g.coefficient(Monomial::variable(0, og));
  FieldPtr field = ctx0.field;
  std::optional<FieldElement> c0;
  std::optional<FieldEmbedding> embed;
  for (std::uint32_t k = 1;; ++k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < ctx0.k().degree() * k; ++i) q *= static_cast<std::uint64_t>(p);
    if (q > GroundField::kMaxOrder)
      throw Error(ErrorCode::FieldTooLarge, "no (p-1)-th root of the leading coefficient in a field of order <= 65536");
    if (k > 1) {
      field = make_field(static_cast<std::uint32_t>(p), ctx0.k().degree() * k);
      embed.emplace(ctx0.field, field);
    }
    const auto target_lead = embed ? (*embed)(lead) : lead;
    if ((c0 = field->root(target_lead, static_cast<std::uint64_t>(p - 1)))) break;
  }
  const RingContext ctx(field, 1, ctx0.N);
  const auto gx = embed ? map_coefficients(g, ctx, *embed) : TruncatedSeries(ctx, g.terms(), g.prec());
  const auto& F = *field;

  const int L = gx.prec() - og;  // g0 is known through L, hence so is a0
  std::vector<FieldElement> g0(L + 1), c(L + 1);
  for (int n = 0; n <= L; ++n) g0[n] = gx.coefficient(Monomial::variable(0, og + n));
  c[0] = *c0;
  const auto g00_inv = F.inv(g0[0]);
  for (int n = 1; n <= L; ++n) {
    FieldElement acc = n % p == 0 ? F.frobenius(c[n / p]) : F.zero();
    for (int i = 1; i <= n; ++i) acc = F.sub(acc, F.mul(g0[i], c[n - i]));
    c[n] = F.mul(acc, g00_inv);
  }
  TermMap terms;
  for (int n = 0; n <= L && n + j <= ctx.N; ++n)
    if (!c[n].is_zero()) terms.emplace(Monomial::variable(0, n + j), c[n]);
  const auto a = TruncatedSeries(ctx, std::move(terms), std::min(ctx.N, L + j));

  const auto lhs = multiply_sharp(gx, a);
  const auto rhs = frobenius_sigma(a).times_monomial(Monomial::variable(0, p - 1));
  const int through = std::min(lhs.prec(), rhs.prec());
  if (!lhs.equal_through(rhs, through)) throw Error(ErrorCode::NoMorphism, "recursion failed to verify");  // not expected
  return {P11Solution{j, field, gx, a, through}};
}

}  // namespace breuil
