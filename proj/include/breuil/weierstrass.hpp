#pragma once

// Normalisation by a shear and Weierstrass preparation in k[[T1, T2]] with
// respect to T1.

#include <vector>

#include "breuil/series.hpp"

namespace breuil {

/// Value of the binary form F at (T1, T2) = (1, lambda).
inline FieldElement evaluate_at_slope(const HomogeneousForm& F, FieldElement lambda) {
  const auto& K = F.ctx.k();
  FieldElement acc = K.zero();
  for (const auto& [m, c] : F.coeffs) acc = K.add(acc, K.mul(c, K.pow(lambda, m.exp[1])));
  return acc;
}

/// f is normalised when ord(f) = e is known and T1^e occurs in f.
inline bool is_normalized(const TruncatedSeries& f) {
  const auto o = ord(f);
  return o.is_known() && !f.coefficient(Monomial::of({o.value, 0})).is_zero();
}

/// First lambda, scanning 0, 1, g, g^2, ..., for which shear(f, lambda) is
/// normalised. The T1^e coefficient of the shear is the initial form at (1, lambda).
inline FieldElement find_normalizing_lambda(const TruncatedSeries& f) {
  if (f.ctx().d != 2) throw Error(ErrorCode::UnsupportedDimension, "normalisation needs two variables");
  const auto F = initial_form(f);
  for (auto lambda : f.k().elements_in_power_order())
    if (!evaluate_at_slope(F, lambda).is_zero()) return lambda;
  throw Error(ErrorCode::NoLambdaInField, "initial form vanishes at every slope in F_" +
                                              std::to_string(f.k().order()) + "; extend the field");
}

struct WeierstrassResult {
  TruncatedSeries unit;
  /// a_0(T2), ..., a_{e-1}(T2), each in T2*k[[T2]].
  std::vector<TruncatedSeries> coefficients;
  int e = 0;

  /// T1^e + sum a_i(T2) T1^i.
  TruncatedSeries polynomial() const {
    const auto& ctx = unit.ctx();
    auto w = TruncatedSeries::monomial(ctx, Monomial::of({e, 0})).truncated(unit.prec());
    for (int i = 0; i < e; ++i) w += coefficients[i].times_monomial(Monomial::of({i, 0})).truncated(unit.prec());
    return w;
  }
};

namespace detail {

// Splits g = T1^e * high + low with deg_{T1}(low) < e. The high part loses e
// degrees of precision.
inline std::pair<TruncatedSeries, TruncatedSeries> split_at_t1_power(const TruncatedSeries& g, int e) {
  TermMap high, low;
  for (const auto& [m, c] : g.terms()) {
    if (m.exp[0] >= e)
      high.emplace(Monomial::of({m.exp[0] - e, m.exp[1]}), c);
    else
      low.emplace(m, c);
  }
  return {TruncatedSeries(g.ctx(), std::move(high), std::max(0, g.prec() - e)),
          TruncatedSeries(g.ctx(), std::move(low), g.prec())};
}

}  // namespace detail

/// f = unit * (T1^e + a_{e-1}(T2) T1^{e-1} + ... + a_0(T2)).
///
/// The stored coefficients of f are treated as a polynomial, and the
/// decomposition of that polynomial is returned through degree f.prec. It is
/// found by Weierstrass division of T1^e by f: with f = P + T1^e Q,
/// deg_{T1} P < e and Q a unit, the quotient is the fixed point of
/// q = Q^{-1} * high(T1^e - q P). P lies in (T2), so each round fixes one more
/// T2-adic degree.
inline WeierstrassResult weierstrass_preparation(const TruncatedSeries& f) {
  if (f.ctx().d != 2) throw Error(ErrorCode::UnsupportedDimension, "Weierstrass preparation needs two variables");
  if (!is_normalized(f)) throw Error(ErrorCode::NotNormalized, "T1^ord(f) does not occur in f");
  const int e = ord(f).value;
  const int n = f.prec();
  const RingContext work = f.ctx().with_precision(std::min(255, n + e));
  const auto fw = TruncatedSeries(work, f.terms(), work.N);

  auto [Q, P] = detail::split_at_t1_power(fw, e);
  const auto Q_inv = invert_unit(Q);
  const auto target = TruncatedSeries::monomial(work, Monomial::of({e, 0}));

  TruncatedSeries q = TruncatedSeries::zero(work);
  for (int round = 0; round <= work.N + 1; ++round) {
    auto [high, low] = detail::split_at_t1_power(target - multiply_sharp(q, P), e);
    auto next = Q_inv.truncated(high.prec()) * high;
    const bool stable = next.terms() == q.terms();
    q = std::move(next);
    if (stable) break;
  }
  auto [high, remainder] = detail::split_at_t1_power(target - multiply_sharp(q, P), e);
  (void)high;

  WeierstrassResult out;
  out.e = e;
  const RingContext& ctx = f.ctx();
  out.unit = TruncatedSeries(ctx, invert_unit(q).terms(), n);
  out.coefficients.assign(e, TruncatedSeries::zero(ctx));
  std::vector<TermMap> parts(e);
  for (const auto& [m, c] : remainder.terms()) {
    if (m.degree() > n) continue;
    parts[m.exp[0]].emplace(Monomial::of({0, m.exp[1]}), ctx.k().neg(c));
  }
  for (int i = 0; i < e; ++i) out.coefficients[i] = TruncatedSeries(ctx, std::move(parts[i]), n);
  return out;
}

}  // namespace breuil
