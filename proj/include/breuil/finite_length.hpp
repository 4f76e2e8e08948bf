#pragma once

// Finite-length pairs (C, phi) with C a direct sum of k[[T1,T2]]/a_j for
// monomial m-primary ideals a_j, and phi: C -> C^(sigma), whose target is the
// sum of the k[[T1,T2]]/a_i^(p). All checks are exact, in finite-dimensional
// k-spaces.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "breuil/ideal_membership.hpp"
#include "breuil/linear_solve.hpp"
#include "breuil/series_io.hpp"

namespace breuil {

struct FiniteLengthPair {
  RingContext ctx;  // d = 2; N large enough for the entries of phi
  std::vector<MonomialIdeal> summands;
  /// phi(i, j): the component S/a_j -> S/a_i^(p).
  std::vector<std::vector<TruncatedSeries>> phi;

  int length() const {
    int l = 0;
    for (const auto& a : summands) l += a.colength();
    return l;
  }
  bool is_zero_module() const noexcept { return summands.empty(); }
};

namespace detail {

// Coordinates of polynomials in the quotients S/a_i^(p), stacked.
class QuotientSpace {
 public:
  QuotientSpace(const std::vector<MonomialIdeal>& targets) : targets_(targets) {
    for (const auto& t : targets_) {
      offset_.push_back(dim_);
      const auto std_monos = t.standard_monomials();
      std::unordered_map<std::uint64_t, int> idx;
      for (std::size_t k = 0; k < std_monos.size(); ++k) idx.emplace(std_monos[k].key(), dim_ + static_cast<int>(k));
      index_.push_back(std::move(idx));
      basis_.push_back(std_monos);
      dim_ += static_cast<int>(std_monos.size());
    }
  }

  int dim() const noexcept { return dim_; }
  const std::vector<Monomial>& basis(int i) const { return basis_[i]; }
  const MonomialIdeal& target(int i) const { return targets_[i]; }

  /// Adds c * m e_i to v (m reduced modulo a_i^(p)).
  void accumulate(std::vector<FieldElement>& v, const GroundField& F, int i, const Monomial& m, FieldElement c) const {
    if (targets_[i].contains(m)) return;
    const int k = index_[i].at(m.key());
    v[k] = F.add(v[k], c);
  }

 private:
  std::vector<MonomialIdeal> targets_;
  std::vector<int> offset_;
  std::vector<std::unordered_map<std::uint64_t, int>> index_;
  std::vector<std::vector<Monomial>> basis_;
  int dim_ = 0;
};

inline std::vector<MonomialIdeal> frobenius_targets(const std::vector<MonomialIdeal>& summands, int p) {
  std::vector<MonomialIdeal> out;
  for (const auto& a : summands) out.push_back(a.frobenius_power(p));
  return out;
}

// Rows spanning hbar * C^(sigma).
inline std::vector<std::vector<FieldElement>> hbar_image_rows(const QuotientSpace& V, int count,
                                                              const TruncatedSeries& hbar) {
  const auto& F = hbar.k();
  std::vector<std::vector<FieldElement>> rows;
  for (int i = 0; i < count; ++i) {
    const int top = V.target(i).max_standard_degree();
    if (hbar.prec() < top)
      throw Error(ErrorCode::PrecisionTooLow, "hbar is needed through degree " + std::to_string(top) + ", have " +
                                                  std::to_string(hbar.prec()));
    for (const auto& mu : V.basis(i)) {
      std::vector<FieldElement> v(V.dim());
      for (const auto& [m, c] : hbar.terms()) V.accumulate(v, F, i, m * mu, c);
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

// Rows spanning the image of phi: nu * phi(e_j) for nu standard for a_j.
inline std::vector<std::vector<FieldElement>> phi_image_rows(const QuotientSpace& V, const FiniteLengthPair& P) {
  const auto& F = P.ctx.k();
  const int l = static_cast<int>(P.summands.size());
  std::vector<std::vector<FieldElement>> rows;
  for (int j = 0; j < l; ++j)
    for (const auto& nu : P.summands[j].standard_monomials()) {
      std::vector<FieldElement> v(V.dim());
      for (int i = 0; i < l; ++i)
        for (const auto& [m, c] : P.phi[i][j].terms()) V.accumulate(v, F, i, m * nu, c);
      rows.push_back(std::move(v));
    }
  return rows;
}

inline bool span_contains_all(const GroundField& F, int dim, const std::vector<std::vector<FieldElement>>& spanning,
                              const std::vector<std::vector<FieldElement>>& rows) {
  RowEchelon e(F, dim);
  for (const auto& r : spanning) e.insert(r);
  for (const auto& r : rows)
    if (!e.contains(r)) return false;
  return true;
}

}  // namespace detail

/// Well-definedness: g * phi(i, j) lies in a_i^(p) for every generator g of a_j.
inline void check_presentation(const FiniteLengthPair& P) {
  const int p = P.ctx.p();
  const int l = static_cast<int>(P.summands.size());
  if (static_cast<int>(P.phi.size()) != l)
    throw Error(ErrorCode::IllFormedPresentation, "phi needs one row per summand");
  for (int i = 0; i < l; ++i) {
    if (static_cast<int>(P.phi[i].size()) != l) throw Error(ErrorCode::IllFormedPresentation, "phi must be square");
    if (!P.summands[i].is_m_primary())
      throw Error(ErrorCode::IllFormedPresentation, "summand " + std::to_string(i + 1) + " does not have finite length");
  }
  for (int i = 0; i < l; ++i) {
    const auto target = P.summands[i].frobenius_power(p);
    for (int j = 0; j < l; ++j)
      for (const auto& g : P.summands[j].generators())
        for (const auto& [m, c] : P.phi[i][j].terms())
          if (!target.contains(m * g))
            throw Error(ErrorCode::IllFormedPresentation, "phi(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                              ") does not kill the relation " +
                                                              monomial_to_string(g, 2));
  }
}

/// hbar * C^(sigma) is contained in the image of phi.
inline bool validate_fl_pair(const FiniteLengthPair& P, const TruncatedSeries& hbar) {
  check_presentation(P);
  if (P.is_zero_module()) return true;
  const auto targets = detail::frobenius_targets(P.summands, P.ctx.p());
  const detail::QuotientSpace V(targets);
  const auto H = detail::hbar_image_rows(V, static_cast<int>(targets.size()), hbar);
  return detail::span_contains_all(P.ctx.k(), V.dim(), detail::phi_image_rows(V, P), H);
}

/// C = k, phi(1) = T1^{p-1} T2^{p-1} in k[[T1,T2]]/(T1^p, T2^p), when hbar lies
/// in (T1^p, T2^p, T1^{p-1} T2^{p-1}).
inline std::optional<FiniteLengthPair> lemma2_witness(const TruncatedSeries& hbar) {
  if (hbar.ctx().d != 2) throw Error(ErrorCode::UnsupportedDimension, "the witness lives over k[[T1,T2]]");
  const int p = hbar.ctx().p();
  const auto ideal = lemma2_ideal(p);
  const auto mem = monomial_ideal_membership(hbar, ideal);
  if (mem.kind == MembershipResult::Kind::UnknownAtPrecision)
    throw Error(ErrorCode::PrecisionTooLow, "membership needs precision " + std::to_string(2 * p - 3));
  if (!mem.is_in()) return std::nullopt;
  FiniteLengthPair P;
  P.ctx = hbar.ctx().with_precision(std::max(hbar.ctx().N, 2 * p - 2));
  P.summands = {MonomialIdeal(2, {Monomial::of({1, 0}), Monomial::of({0, 1})})};
  P.phi = {{TruncatedSeries::monomial(P.ctx, Monomial::of({p - 1, p - 1}))}};
  if (!validate_fl_pair(P, hbar))
    throw Error(ErrorCode::IllFormedPresentation, "witness failed validation");  // unreachable for ideal members
  return P;
}

/// Monomial m-primary ideals of k[[T1,T2]] with the given colength, one per
/// partition lambda_1 >= lambda_2 >= ... (standard monomials T1^a T2^b with
/// a < lambda_{b+1}). Partitions are listed in decreasing lexicographic order.
inline std::vector<MonomialIdeal> staircase_ideals(int colength) {
  std::vector<MonomialIdeal> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      std::vector<Monomial> gens;
      for (std::size_t b = 0; b < parts.size(); ++b) gens.push_back(Monomial::of({parts[b], static_cast<int>(b)}));
      gens.push_back(Monomial::of({0, static_cast<int>(parts.size())}));
      out.emplace_back(2, std::move(gens));
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(left - part, part);
      parts.pop_back();
    }
  };
  if (colength >= 1) rec(colength, colength);
  return out;
}

struct OracleCensus {
  long long module_shapes = 0;      // multisets of summands examined
  long long pruned_by_dimension = 0;
  long long pruned_by_envelope = 0;
  long long phi_candidates = 0;

  std::string to_string() const {
    return "shapes=" + std::to_string(module_shapes) + " pruned_dimension=" + std::to_string(pruned_by_dimension) +
           " pruned_envelope=" + std::to_string(pruned_by_envelope) + " phi_candidates=" + std::to_string(phi_candidates);
  }
};

struct OracleResult {
  enum class Kind { NoNonzeroPairFound, Witness };
  Kind kind = Kind::NoNonzeroPairFound;
  std::optional<FiniteLengthPair> witness;
  OracleCensus census;
};

inline constexpr long long kDefaultOracleBudget = 2'000'000;

/// Exhaustive search for a nonzero pair (C, phi) with hbar C^(sigma) inside
/// im(phi): C runs over direct sums of staircase quotients of total colength
/// <= max_colength, entries of phi over monomials with every exponent
/// <= max_degree and coefficients in F_p. Shapes are skipped when
/// dim(hbar C^(sigma)) exceeds length(C) (im(phi) is spanned by length(C)
/// vectors) or when hbar C^(sigma) is not inside the span of every allowed
/// product. The first witness in enumeration order is returned.
inline OracleResult oracle_lemma2_small(const TruncatedSeries& hbar, int max_colength, int max_degree,
                                        long long budget = kDefaultOracleBudget) {
  const auto& ctx0 = hbar.ctx();
  if (ctx0.d != 2) throw Error(ErrorCode::UnsupportedDimension, "the oracle works over k[[T1,T2]]");
  const int p = ctx0.p();
  const auto& F = ctx0.k();
  const RingContext ctx = ctx0.with_precision(std::min(255, std::max(ctx0.N, 2 * max_degree)));

  std::vector<MonomialIdeal> catalogue;  // ordered by colength, then partition order
  for (int n = 1; n <= max_colength; ++n)
    for (auto& a : staircase_ideals(n)) catalogue.push_back(std::move(a));

  OracleResult result;
  auto& census = result.census;
  std::vector<int> chosen;

  auto try_shape = [&]() -> bool {
    ++census.module_shapes;
    std::vector<MonomialIdeal> summands;
    for (int c : chosen) summands.push_back(catalogue[c]);
    const int l = static_cast<int>(summands.size());
    int length = 0;
    for (const auto& a : summands) length += a.colength();
    const auto targets = detail::frobenius_targets(summands, p);
    const detail::QuotientSpace V(targets);
    const auto H = detail::hbar_image_rows(V, l, hbar);
    if (rank_over_field(F, H) > length) {
      ++census.pruned_by_dimension;
      return false;
    }
    // Allowed monomials for each component, then the envelope of all products.
    struct Slot {
      int i, j;
      Monomial mu;
    };
    std::vector<Slot> slots;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        for (const auto& mu : V.basis(i)) {
          if (mu.exp[0] > max_degree || mu.exp[1] > max_degree) continue;
          bool ok = true;
          for (const auto& g : summands[j].generators()) ok = ok && targets[i].contains(mu * g);
          if (ok) slots.push_back({i, j, mu});
        }
    std::vector<std::vector<Monomial>> source_basis;
    for (const auto& a : summands) source_basis.push_back(a.standard_monomials());
    {
      std::vector<std::vector<FieldElement>> env;
      for (const auto& s : slots)
        for (const auto& nu : source_basis[s.j]) {
          std::vector<FieldElement> v(V.dim());
          V.accumulate(v, F, s.i, s.mu * nu, F.one());
          env.push_back(std::move(v));
        }
      if (!detail::span_contains_all(F, V.dim(), env, H)) {
        ++census.pruned_by_envelope;
        return false;
      }
    }
    // Coefficients over F_p in lexicographic order, starting from phi = 0.
    std::vector<std::uint32_t> coeff(slots.size(), 0);
    for (;;) {
      if (++census.phi_candidates > budget)
        throw Error(ErrorCode::BudgetExceeded, "oracle budget of " + std::to_string(budget) + " candidates spent; " +
                                                   census.to_string());
      FiniteLengthPair P;
      P.ctx = ctx;
      P.summands = summands;
      P.phi.assign(l, std::vector<TruncatedSeries>(l, TruncatedSeries::zero(ctx)));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (coeff[s] != 0)
          P.phi[slots[s].i][slots[s].j] += TruncatedSeries::monomial(ctx, slots[s].mu, FieldElement{coeff[s]});
      if (detail::span_contains_all(F, V.dim(), detail::phi_image_rows(V, P), H)) {
        result.kind = OracleResult::Kind::Witness;
        result.witness = std::move(P);
        return true;
      }
      std::size_t pos = slots.size();
      while (pos > 0) {
        --pos;
        if (++coeff[pos] < static_cast<std::uint32_t>(p)) break;
        coeff[pos] = 0;
        if (pos == 0) return false;
      }
      if (slots.empty()) return false;
    }
  };

  // Multisets of catalogue entries (non-decreasing indices) with total colength <= budget.
  std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
    for (int c = start; c < static_cast<int>(catalogue.size()); ++c) {
      const int len = catalogue[c].colength();
      if (len > left) continue;
      chosen.push_back(c);
      if (try_shape() || rec(c, left - len)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(0, max_colength);
  return result;
}

}  // namespace breuil
