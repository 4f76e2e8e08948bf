#pragma once

// Cokernel tests, surjectivity and twisted nilpotence for matrices over
// k[[T1..Td]].

#include <string>
#include <vector>

#include "breuil/linear_solve.hpp"

namespace breuil {

struct AnnihilationResult {
  enum class Kind { Certified, Refuted };
  Kind kind = Kind::Refuted;
  int refuted_degree = -1;
  int precision = 0;
  std::vector<SeriesMatrix> solutions;  // X_i with A X_i = f e_i, when certified

  bool certified() const noexcept { return kind == Kind::Certified; }
};

/// Whether f * e_i lies in the image of A for every i, at precision `prec`
/// (default: the common precision of A and f).
inline AnnihilationResult coker_annihilated_by(const SeriesMatrix& A, const TruncatedSeries& f, int prec = -1) {
  if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "cokernel test needs a square matrix, got " + A.shape());
  if (prec < 0) prec = std::min(A.prec(), f.prec());
  const auto rhs = SeriesMatrix::scalar(A.ctx(), A.rows(), f);
  auto results = solve_linear_multi(A, rhs, prec);
  AnnihilationResult out;
  out.precision = prec;
  out.kind = AnnihilationResult::Kind::Certified;
  for (auto& r : results) {
    if (!r.solved()) {
      if (out.kind == AnnihilationResult::Kind::Certified || r.first_failing_degree < out.refuted_degree)
        out.refuted_degree = r.first_failing_degree;
      out.kind = AnnihilationResult::Kind::Refuted;
    } else {
      out.solutions.push_back(std::move(r.x));
    }
  }
  if (!out.certified()) out.solutions.clear();
  return out;
}

struct FiniteLengthResult {
  enum class Kind { FiniteLength, NotFiniteUpTo };
  Kind kind = Kind::NotFiniteUpTo;
  int bound = 0;  // n0 with r^{n0} * target inside the image, or the search limit

  bool finite() const noexcept { return kind == Kind::FiniteLength; }
};

/// Least n0 <= limit with r^{n0} * S^rows contained in the image of U.
///
/// The test for n0 solves U x = mu e_i modulo r^{n0+1} for every monomial mu
/// of degree n0. Success gives r^{n0} T in im(U) + r^{n0+1} T, hence
/// r^{n0} T in im(U) by Nakayama; failure is exact as well. So each answer
/// needs U only through degree n0. The default limit is prec/2.
inline FiniteLengthResult coker_finite_length(const SeriesMatrix& U, int limit = -1) {
  if (limit < 0) limit = U.prec() / 2;
  const auto& ctx = U.ctx();
  for (int n0 = 0; n0 <= limit; ++n0) {
    std::vector<Monomial> monos;
    for_each_monomial_of_degree(ctx.d, n0, [&](const Monomial& m) { monos.push_back(m); });
    SeriesMatrix rhs(ctx, U.rows(), static_cast<int>(monos.size()) * U.rows());
    int col = 0;
    for (int i = 0; i < U.rows(); ++i)
      for (const auto& m : monos) rhs(i, col++) = TruncatedSeries::monomial(ctx, m);
    const auto results = solve_linear_multi(U, rhs, n0);
    bool all = true;
    for (const auto& r : results) all = all && r.solved();
    if (all) return {FiniteLengthResult::Kind::FiniteLength, n0};
  }
  return {FiniteLengthResult::Kind::NotFiniteUpTo, limit};
}

/// U is surjective iff U mod r has full row rank (Nakayama).
inline bool is_surjective(const SeriesMatrix& U) {
  return rank_over_field(U.ctx().k(), reduce_mod_maximal(U)) == U.rows();
}

/// Whether sigma^{s-1}(A0) ... sigma(A0) A0 vanishes for some s <= r*m, where
/// A0 = A mod r and sigma raises entries to the p-th power.
inline bool nilpotent_mod_maximal(const SeriesMatrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "nilpotence needs a square matrix");
  const auto& F = A.ctx().k();
  const int r = A.rows();
  if (r == 0) return true;
  auto A0 = reduce_mod_maximal(A);
  auto is_zero = [](const std::vector<std::vector<FieldElement>>& m) {
    for (const auto& row : m)
      for (auto x : row)
        if (!x.is_zero()) return false;
    return true;
  };
  auto mul = [&](const std::vector<std::vector<FieldElement>>& X, const std::vector<std::vector<FieldElement>>& Y) {
    std::vector<std::vector<FieldElement>> Z(r, std::vector<FieldElement>(r));
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < r; ++l) {
        if (X[i][l].is_zero()) continue;
        for (int j = 0; j < r; ++j) Z[i][j] = F.add(Z[i][j], F.mul(X[i][l], Y[l][j]));
      }
    return Z;
  };
  auto product = A0;
  auto twisted = A0;
  const int limit = r * static_cast<int>(F.degree());
  for (int s = 1; s <= limit; ++s) {
    if (is_zero(product)) return true;
    if (s == limit) break;
    for (auto& row : twisted)
      for (auto& x : row) x = F.frobenius(x);
    product = mul(twisted, product);
  }
  return false;
}

}  // namespace breuil
