#pragma once

// Counterexample bundles: a morphism alpha: M1 -> M2 of connected Breuil
// modules whose cokernel has finite length but which is not surjective.
//
//   case i:   hbar divisible by u^p, (t, u) regular.  M1 has rank 3, M2 = (u^p),
//             alpha = (t, u, tu).
//   case ii:  hbar divisible by (uv)^{p-1}, (u, v) regular.  M1 = diag(u^{p-1},
//             v^{p-1}), M2 = ((uv)^{p-1}), alpha = (v, u).
//   case iii: hbar = det Gamma = c (a T1^p + b T2^p + c T1^{p-1} T2^{p-1}), M1 =
//             Gamma, M2 = (tau), alpha = (T1, T2).

#include <optional>
#include <string>

#include "breuil/breuil_module.hpp"

namespace breuil {

enum class T4Case { i, ii, iii };

inline const char* to_string(T4Case c) {
  switch (c) {
    case T4Case::i: return "i";
    case T4Case::ii: return "ii";
    default: return "iii";
  }
}

inline T4Case parse_t4_case(const std::string& s) {
  if (s == "i") return T4Case::i;
  if (s == "ii") return T4Case::ii;
  if (s == "iii") return T4Case::iii;
  throw Error(ErrorCode::InvalidInput, "case must be i, ii or iii, got '" + s + "'");
}

struct T4Params {
  T4Case kind = T4Case::i;
  std::optional<TruncatedSeries> t, u, v, a, b, c;
  /// Defaults to u^p, (uv)^{p-1} or det Gamma.
  std::optional<TruncatedSeries> hbar;
};

struct BundleChecks {
  bool morphism_identity = false;
  bool certificate_identities = false;  // both modules, as polynomial identities
  bool coker_finite_length = false;
  bool non_surjective = false;
  int coker_bound = -1;
  /// f | hbar was decided by the solver at this precision (-1: exactly).
  int divisibility_precision = -1;

  bool all() const noexcept { return morphism_identity && certificate_identities && coker_finite_length && non_surjective; }
};

struct CounterexampleBundle {
  T4Case kind = T4Case::i;
  BreuilModP M1, M2;
  MorphismP alpha;
  BundleChecks checks;
};

namespace detail {

inline const TruncatedSeries& need(const std::optional<TruncatedSeries>& x, const char* name, T4Case c) {
  if (!x) throw Error(ErrorCode::ShapeMismatch, std::string("case ") + to_string(c) + " needs --" + name);
  return *x;
}

inline void check_regular(const TruncatedSeries& x, const TruncatedSeries& y, const char* names) {
  const auto U = SeriesMatrix::row_vector(x.ctx(), {x, y});
  if (!coker_finite_length(U).finite())
    throw Error(ErrorCode::NotRegularSequence, std::string(names) + " do not form a regular sequence");
}

// Re-reads a polynomial in the bundle context; hbar keeps its precision.
inline TruncatedSeries lift(const TruncatedSeries& f, const RingContext& big) { return f.as_polynomial_in(big); }

inline void require_divides(const TruncatedSeries& f, const TruncatedSeries& hbar, T4Case c, const std::string& what,
                            BundleChecks& checks) {
  bool exact = false;
  if (!divides_hbar(f, hbar, exact))
    throw Error(ErrorCode::ShapeMismatch, std::string("case ") + to_string(c) + ": " + what + " does not divide hbar");
  if (!exact) checks.divisibility_precision = hbar.prec();
}

inline void run_checks(CounterexampleBundle& B) {
  auto& ch = B.checks;
  ch.morphism_identity = check_morphism(B.alpha);
  const auto r1 = validate(B.M1);
  const auto r2 = validate(B.M2);
  ch.certificate_identities = r1.certified && r2.certified && r1.connected && r2.connected &&
                              polynomial_products_equal(B.M1.A, B.M1.cert->B, SeriesMatrix::scalar(B.M1.ctx, B.M1.rank(), B.M1.cert->f),
                                                        SeriesMatrix::identity(B.M1.ctx, B.M1.rank()));
  const auto fl = coker_finite_length(B.alpha.U);
  ch.coker_finite_length = fl.finite();
  ch.coker_bound = fl.finite() ? fl.bound : -1;
  ch.non_surjective = !is_surjective(B.alpha.U);
}

inline int degree_of(const TruncatedSeries& f) { return std::max(0, f.max_degree()); }

}  // namespace detail

/// Builds and verifies the bundle. Inputs are read as polynomials; the
/// bundle lives in a context large enough for all products to be exact.
inline CounterexampleBundle t4_build(const T4Params& P, const RingContext& ctx) {
  if (ctx.d != 2) throw Error(ErrorCode::UnsupportedDimension, "the constructions live over k[[T1,T2]]");
  const int p = ctx.p();
  CounterexampleBundle B;
  B.kind = P.kind;

  int bound = ctx.N;
  auto make_big = [&](int degree) {
    bound = std::max(bound, degree);
    if (bound > 255) throw Error(ErrorCode::PrecisionTooLow, "the construction needs degree " + std::to_string(bound) + " > 255");
    return ctx.with_precision(bound);
  };
  auto hbar_in = [&](const RingContext& big, const TruncatedSeries& fallback) {
    if (!P.hbar) return fallback;
    return TruncatedSeries(big, P.hbar->terms(), P.hbar->prec());
  };

  switch (P.kind) {
    case T4Case::i: {
      const auto& t0 = detail::need(P.t, "t", P.kind);
      const auto& u0 = detail::need(P.u, "u", P.kind);
      if (!ord(t0).is_known() || ord(t0).value < 1 || !ord(u0).is_known() || ord(u0).value < 1)
        throw Error(ErrorCode::ShapeMismatch, "case i: t and u must be nonzero and lie in the maximal ideal");
      const int dt = detail::degree_of(t0), du = detail::degree_of(u0);
      const int dw = std::max(dt, p * dt + (p - 1) * du);
      const int ds = std::max(du, (p - 1) * dt);
      const int dG = std::max({p * du, dw + ds, (p - 1) * du + ds});
      const int dD = std::max({ds, (p - 1) * du, dw, du});
      const auto big = make_big(std::max({dG + dD, p * (dt + du) + dG, p * du + dt + du}));
      const auto t = detail::lift(t0, big), u = detail::lift(u0, big);
      detail::check_regular(t, u, "t, u");
      const auto up = u.pow(p), upm1 = u.pow(p - 1);
      const auto s = u - t.pow(p - 1);
      const auto w = t - t.pow(p) * upm1;
      const auto zero = TruncatedSeries::zero(big), one = TruncatedSeries::constant(big, 1);
      const auto Gamma = SeriesMatrix::from_rows(big, {{zero, zero, up}, {w, u, s * w}, {upm1, zero, upm1 * s}});
      const auto Delta = SeriesMatrix::from_rows(big, {{-s, zero, u}, {zero, upm1, -w}, {one, zero, zero}});
      const auto hbar = hbar_in(big, up);
      detail::require_divides(up, hbar, P.kind, "u^p", B.checks);
      B.M1 = BreuilModP{big, hbar, Gamma, Certificate{Delta, up}};
      B.M2 = rank_one_module(hbar, up);
      B.alpha = MorphismP{B.M1, B.M2, SeriesMatrix::row_vector(big, {t, u, t * u})};
      break;
    }
    case T4Case::ii: {
      const auto& u0 = detail::need(P.u, "u", P.kind);
      const auto& v0 = detail::need(P.v, "v", P.kind);
      const int du = detail::degree_of(u0), dv = detail::degree_of(v0);
      const auto big = make_big(p * (du + dv) + (p - 1) * (du + dv));
      const auto u = detail::lift(u0, big), v = detail::lift(v0, big);
      detail::check_regular(u, v, "u, v");
      const auto a = u.pow(p - 1), b = v.pow(p - 1), tau = a * b;
      const auto hbar = hbar_in(big, tau);
      detail::require_divides(tau, hbar, P.kind, "(uv)^(p-1)", B.checks);
      B.M1 = BreuilModP{big, hbar, SeriesMatrix::diagonal(big, {a, b}), Certificate{SeriesMatrix::diagonal(big, {b, a}), tau}};
      B.M2 = rank_one_module(hbar, tau);
      B.alpha = MorphismP{B.M1, B.M2, SeriesMatrix::row_vector(big, {v, u})};
      break;
    }
    case T4Case::iii: {
      const auto& a0 = detail::need(P.a, "a", P.kind);
      const auto& b0 = detail::need(P.b, "b", P.kind);
      const auto& c0 = detail::need(P.c, "c", P.kind);
      const int dmax = std::max({detail::degree_of(a0), detail::degree_of(b0), detail::degree_of(c0)});
      const int dG = dmax + p - 1;
      const auto big = make_big(2 * dG + p + 1);
      const auto a = detail::lift(a0, big), b = detail::lift(b0, big), c = detail::lift(c0, big);
      const auto T1 = TruncatedSeries::variable(big, 0), T2 = TruncatedSeries::variable(big, 1);
      const auto Gamma = SeriesMatrix::from_rows(big, {{a * T1 + c * T2.pow(p - 1), a * T2},
                                                       {b * T1, b * T2 + c * T1.pow(p - 1)}});
      const auto det = Gamma(0, 0) * Gamma(1, 1) - Gamma(0, 1) * Gamma(1, 0);
      const auto adj = SeriesMatrix::from_rows(big, {{Gamma(1, 1), -Gamma(0, 1)}, {-Gamma(1, 0), Gamma(0, 0)}});
      const auto tau = a * T1.pow(p) + b * T2.pow(p) + c * (T1 * T2).pow(p - 1);
      if (!ord(det).is_known()) throw Error(ErrorCode::ShapeMismatch, "case iii: det Gamma vanishes");
      const auto hbar = hbar_in(big, det);
      if (hbar.terms() != det.terms())
        throw Error(ErrorCode::ShapeMismatch, "case iii: hbar differs from det Gamma = " + to_string(det));
      if (!(det.terms() == (c * tau).terms())) throw Error(ErrorCode::ShapeMismatch, "case iii: det Gamma != c tau");
      B.M1 = BreuilModP{big, hbar, Gamma, Certificate{adj, det}};
      // hbar = c tau exactly, so tau divides hbar; the rank-1 certificate uses f = tau.
      B.M2 = rank_one_module(hbar, tau);
      B.alpha = MorphismP{B.M1, B.M2, SeriesMatrix::row_vector(big, {T1, T2})};
      break;
    }
  }
  detail::run_checks(B);
  return B;
}

/// Delta for case i by solving Gamma X = u^p I column by column at `prec`;
/// used to cross-check the closed form.
inline AnnihilationResult t4_case_i_solver_check(const CounterexampleBundle& B, int prec) {
  return coker_annihilated_by(B.M1.A, B.M1.cert->f, prec);
}

}  // namespace breuil
