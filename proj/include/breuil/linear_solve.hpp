#pragma once

// Exact linear algebra over F_q and the graded solver for A x = b over
// k[[T1..Td]] / r^{prec+1}.

#include <optional>
#include <vector>

#include "breuil/matrix.hpp"

namespace breuil {

/// Incremental row echelon form over F_q. Rows have `width` unknown columns
/// followed by `rhs` right-hand-side columns; pivots are searched only among
/// the unknown columns.
class RowEchelon {
 public:
  RowEchelon(const GroundField& F, int width, int rhs = 0) : F_(F), width_(width), rhs_(rhs), pivot_of_col_(width, -1) {}

  int width() const noexcept { return width_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  /// Reduces `row` against the stored pivots in place.
  void reduce(std::vector<FieldElement>& row) const {
    for (int c = 0; c < width_; ++c) {
      if (row[c].is_zero()) continue;
      const int r = pivot_of_col_[c];
      if (r < 0) continue;
      const auto factor = row[c];
      const auto& prow = rows_[r];
      for (int j = c; j < width_ + rhs_; ++j)
        if (!prow[j].is_zero()) row[j] = F_.sub(row[j], F_.mul(factor, prow[j]));
    }
  }

  /// Adds a row. Returns the reduced row when it has no pivot left (it then
  /// carries only right-hand-side entries), nullopt when it was stored.
  std::optional<std::vector<FieldElement>> insert(std::vector<FieldElement> row) {
    reduce(row);
    for (int c = 0; c < width_; ++c) {
      if (row[c].is_zero()) continue;
      const auto inv = F_.inv(row[c]);
      for (int j = c; j < width_ + rhs_; ++j) row[j] = F_.mul(row[j], inv);
      pivot_of_col_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return std::nullopt;
    }
    return row;
  }

  /// Whether `row` (unknown part only) lies in the span of the stored rows.
  bool contains(std::vector<FieldElement> row) const {
    reduce(row);
    for (int c = 0; c < width_; ++c)
      if (!row[c].is_zero()) return false;
    return true;
  }

  /// Particular solution for right-hand-side column `k` with free variables 0.
  std::vector<FieldElement> back_substitute(int k) const {
    std::vector<FieldElement> x(width_);
    for (int c = width_ - 1; c >= 0; --c) {
      const int r = pivot_of_col_[c];
      if (r < 0) continue;
      const auto& row = rows_[r];
      auto v = row[width_ + k];
      for (int j = c + 1; j < width_; ++j)
        if (!row[j].is_zero() && !x[j].is_zero()) v = F_.sub(v, F_.mul(row[j], x[j]));
      x[c] = v;
    }
    return x;
  }

 private:
  const GroundField& F_;
  int width_, rhs_;
  std::vector<int> pivot_of_col_;
  std::vector<std::vector<FieldElement>> rows_;
};

/// Rank of a small matrix over F_q.
inline int rank_over_field(const GroundField& F, const std::vector<std::vector<FieldElement>>& m) {
  if (m.empty()) return 0;
  RowEchelon e(F, static_cast<int>(m[0].size()));
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

struct SolveResult {
  enum class Kind { Solution, NoSolution };
  Kind kind = Kind::NoSolution;
  SeriesMatrix x;                  // column, valid when solved
  int first_failing_degree = -1;  // valid when not solved
  int precision = 0;

  bool solved() const noexcept { return kind == Kind::Solution; }
};

inline constexpr long long kMaxSolverUnknowns = 60000;

/// Solves A x = b_k modulo r^{prec+1} for every column b_k of B.
///
/// The unknowns are the coefficients of x through degree prec. Multiplying by
/// A never lowers degrees, so the equations of degree n only involve unknowns
/// of degree <= n; they are added degree by degree and the first degree at
/// which a column becomes inconsistent is reported for that column.
inline std::vector<SolveResult> solve_linear_multi(const SeriesMatrix& A, const SeriesMatrix& B, int prec) {
  if (!(A.ctx() == B.ctx())) throw Error(ErrorCode::ContextMismatch, "solve: matrices live over different rings");
  if (A.rows() != B.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: " + A.shape() + " vs rhs " + B.shape());
  if (prec < 0) prec = 0;
  if (prec > std::min(A.prec(), B.prec()))
    throw Error(ErrorCode::PrecisionTooLow, "solve at precision " + std::to_string(prec) + " needs data through that degree, have " +
                                                std::to_string(std::min(A.prec(), B.prec())));
  const auto& ctx = A.ctx();
  const auto& F = ctx.k();
  const MonomialBasis basis(ctx.d, prec);
  const int nmono = basis.size();
  const int r = A.rows(), c = A.cols(), nrhs = B.cols();
  if (static_cast<long long>(nmono) * c > kMaxSolverUnknowns)
    throw Error(ErrorCode::BudgetExceeded, "linear system with " + std::to_string(static_cast<long long>(nmono) * c) + " unknowns");
  const int width = nmono * c;
  auto unknown = [&](int j, int mono) { return j * nmono + mono; };

  // Each entry of A split by degree, for the equation of monomial mu:
  //   sum_j sum_{alpha + nu = mu} A_ij[alpha] x_j[nu] = B_ik[mu].
  RowEchelon ech(F, width, nrhs);
  std::vector<int> failing(nrhs, -1);
  for (int n = 0; n <= prec; ++n) {
    for (int idx = basis.degree_begin(n); idx < basis.degree_end(n); ++idx) {
      const Monomial& mu = basis[idx];
      for (int i = 0; i < r; ++i) {
        std::vector<FieldElement> row(width + nrhs);
        bool any = false;
        for (int j = 0; j < c; ++j)
          for (const auto& [alpha, a] : A(i, j).terms()) {
            if (alpha.degree() > n) break;
            if (!alpha.divides(mu)) continue;
            const int nu = basis.index_of(mu / alpha);
            row[unknown(j, nu)] = F.add(row[unknown(j, nu)], a);
            any = true;
          }
        for (int k = 0; k < nrhs; ++k) {
          row[width + k] = B(i, k).coefficient(mu);
          if (!row[width + k].is_zero()) any = true;
        }
        if (!any) continue;
        if (auto left = ech.insert(std::move(row)))
          for (int k = 0; k < nrhs; ++k)
            if (failing[k] < 0 && !(*left)[width + k].is_zero()) failing[k] = n;
      }
    }
  }

  std::vector<SolveResult> out(nrhs);
  for (int k = 0; k < nrhs; ++k) {
    out[k].precision = prec;
    if (failing[k] >= 0) {
      out[k].kind = SolveResult::Kind::NoSolution;
      out[k].first_failing_degree = failing[k];
      continue;
    }
    const auto values = ech.back_substitute(k);
    SeriesMatrix x(ctx, c, 1);
    for (int j = 0; j < c; ++j) {
      TermMap t;
      for (int m = 0; m < nmono; ++m)
        if (!values[unknown(j, m)].is_zero()) t.emplace(basis[m], values[unknown(j, m)]);
      x(j, 0) = TruncatedSeries(ctx, std::move(t), prec);
    }
    out[k].kind = SolveResult::Kind::Solution;
    out[k].x = std::move(x);
  }
  return out;
}

inline SolveResult solve_linear(const SeriesMatrix& A, const SeriesMatrix& b, int prec) {
  if (b.cols() != 1) throw Error(ErrorCode::DimensionMismatch, "right-hand side must be a column");
  return solve_linear_multi(A, b, prec).front();
}

/// Whether f divides g modulo r^{prec+1}; the quotient when it does.
inline std::optional<TruncatedSeries> divide_at_precision(const TruncatedSeries& g, const TruncatedSeries& f, int prec) {
  const auto res = solve_linear(SeriesMatrix::from_rows(f.ctx(), {{f}}), SeriesMatrix::from_rows(g.ctx(), {{g}}), prec);
  if (!res.solved()) return std::nullopt;
  return res.x(0, 0);
}

}  // namespace breuil
