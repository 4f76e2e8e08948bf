#pragma once

#include <optional>

#include "breuil/series.hpp"

namespace breuil {

struct MembershipResult {
  enum class Kind { In, NotIn, UnknownAtPrecision };
  Kind kind = Kind::UnknownAtPrecision;
  std::optional<Monomial> witness;  // lowest-degree monomial of f outside the ideal

  bool is_in() const noexcept { return kind == Kind::In; }
  bool is_not_in() const noexcept { return kind == Kind::NotIn; }
};

/// A series lies in a monomial ideal iff each of its monomials does. The answer
/// In needs every degree that could carry a monomial outside the ideal to be
/// known, i.e. prec >= the top degree of the (finite) complement.
inline MembershipResult monomial_ideal_membership(const TruncatedSeries& f, const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) throw Error(ErrorCode::InvalidInput, "ideal needs at least one generator");
  for (const auto& [m, c] : f.terms())
    if (!ideal.contains(m)) return {MembershipResult::Kind::NotIn, m};
  if (ideal.is_m_primary() && ideal.max_standard_degree() <= f.prec()) return {MembershipResult::Kind::In, {}};
  return {MembershipResult::Kind::UnknownAtPrecision, {}};
}

inline MembershipResult monomial_ideal_membership(const TruncatedSeries& f, const std::vector<Monomial>& gens) {
  return monomial_ideal_membership(f, MonomialIdeal(f.ctx().d, gens));
}

/// (T1^p, T2^p, T1^{p-1} T2^{p-1}).
inline MonomialIdeal lemma2_ideal(int p) {
  return MonomialIdeal(2, {Monomial::of({p, 0}), Monomial::of({0, p}), Monomial::of({p - 1, p - 1})});
}

}  // namespace breuil
