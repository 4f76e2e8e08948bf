#pragma once

// Dense matrices over truncated series sharing one ring context.

#include <string>
#include <vector>

#include "breuil/series.hpp"

namespace breuil {

class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(const RingContext& ctx, int rows, int cols)
      : ctx_(ctx), rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, TruncatedSeries::zero(ctx)) {
    if (rows < 0 || cols < 0) throw Error(ErrorCode::DimensionMismatch, "negative matrix dimension");
  }

  static SeriesMatrix zero(const RingContext& ctx, int rows, int cols) { return SeriesMatrix(ctx, rows, cols); }
  static SeriesMatrix identity(const RingContext& ctx, int n) { return scalar(ctx, n, TruncatedSeries::constant(ctx, 1)); }
  /// f * I_n.
  static SeriesMatrix scalar(const RingContext& ctx, int n, const TruncatedSeries& f) {
    SeriesMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = f;
    return m;
  }
  static SeriesMatrix diagonal(const RingContext& ctx, const std::vector<TruncatedSeries>& d) {
    const int n = static_cast<int>(d.size());
    SeriesMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
  }
  static SeriesMatrix from_rows(const RingContext& ctx, const std::vector<std::vector<TruncatedSeries>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    SeriesMatrix m(ctx, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (int j = 0; j < c; ++j) {
        rows[i][j].check_ctx(m(i, j));
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }
  static SeriesMatrix row_vector(const RingContext& ctx, const std::vector<TruncatedSeries>& v) { return from_rows(ctx, {v}); }
  static SeriesMatrix column_vector(const RingContext& ctx, const std::vector<TruncatedSeries>& v) {
    SeriesMatrix m(ctx, static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
  }

  const RingContext& ctx() const noexcept { return ctx_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  TruncatedSeries& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const TruncatedSeries& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  /// Minimum entry precision (N for the empty matrix).
  int prec() const noexcept {
    int p = ctx_.N;
    for (const auto& e : entries_) p = std::min(p, e.prec());
    return p;
  }

  /// Largest total degree of a stored term, 0 if none.
  int max_degree() const noexcept {
    int d = 0;
    for (const auto& e : entries_) d = std::max(d, e.max_degree());
    return d;
  }

  bool is_zero() const noexcept {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  SeriesMatrix column(int j) const {
    SeriesMatrix c(ctx_, rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  SeriesMatrix transpose() const {
    SeriesMatrix t(ctx_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  SeriesMatrix truncated(int n) const {
    SeriesMatrix t = *this;
    for (auto& e : t.entries_) e = e.truncated(n);
    return t;
  }

  SeriesMatrix scaled(const TruncatedSeries& f) const {
    SeriesMatrix t = *this;
    for (auto& e : t.entries_) e = f * e;
    return t;
  }

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    a.check_same_shape(b);
    SeriesMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
  }
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    a.check_same_shape(b);
    SeriesMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
  }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + a.shape() + " by " + b.shape());
    if (!(a.ctx_ == b.ctx_)) throw Error(ErrorCode::ContextMismatch, "matrices live over different rings");
    SeriesMatrix r(a.ctx_, a.rows_, b.cols_);
    const int prec = std::min(a.prec(), b.prec());
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        auto acc = TruncatedSeries::zero(a.ctx_).truncated(prec);
        for (int l = 0; l < a.cols_; ++l) acc += a(i, l) * b(l, j);
        r(i, j) = acc;
      }
    return r;
  }

  /// Same shape and the same stored terms in every degree <= n.
  bool equal_through(const SeriesMatrix& o, int n) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (!entries_[i].equal_through(o.entries_[i], n)) return false;
    return true;
  }

  /// Same shape and identical stored terms (precision ignored).
  bool same_terms(const SeriesMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].terms() != o.entries_[i].terms()) return false;
    return true;
  }

  /// Entries re-read as polynomials in another context (see TruncatedSeries::as_polynomial_in).
  SeriesMatrix as_polynomial_in(const RingContext& target) const {
    SeriesMatrix r(target, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].as_polynomial_in(target);
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void check_same_shape(const SeriesMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::DimensionMismatch, shape() + " vs " + o.shape());
    if (!(ctx_ == o.ctx_)) throw Error(ErrorCode::ContextMismatch, "matrices live over different rings");
  }

 private:
  RingContext ctx_;
  int rows_ = 0, cols_ = 0;
  std::vector<TruncatedSeries> entries_;
};

/// Entrywise sigma: the matrix of U^{(sigma)}.
inline SeriesMatrix twist(const SeriesMatrix& U) {
  SeriesMatrix r(U.ctx(), U.rows(), U.cols());
  for (int i = 0; i < U.rows(); ++i)
    for (int j = 0; j < U.cols(); ++j) r(i, j) = frobenius_sigma(U(i, j));
  return r;
}

/// Constant terms, i.e. the reduction modulo the maximal ideal.
inline std::vector<std::vector<FieldElement>> reduce_mod_maximal(const SeriesMatrix& U) {
  std::vector<std::vector<FieldElement>> out(U.rows(), std::vector<FieldElement>(U.cols()));
  for (int i = 0; i < U.rows(); ++i)
    for (int j = 0; j < U.cols(); ++j) out[i][j] = U(i, j).constant_term();
  return out;
}

/// A context in which products of polynomials of total degree up to `degree`
/// are computed without truncation. nullopt if that exceeds the supported N.
inline std::optional<RingContext> exact_context(const RingContext& ctx, int degree) {
  if (degree > 255) return std::nullopt;
  return ctx.with_precision(std::max({1, degree, ctx.N}));
}

/// X*Y == Z*W with the stored entries read as polynomials. Falls back to
/// agreement through the common precision when the degrees are too large.
inline bool polynomial_products_equal(const SeriesMatrix& X, const SeriesMatrix& Y, const SeriesMatrix& Z,
                                      const SeriesMatrix& W) {
  const int bound = std::max(X.max_degree() + Y.max_degree(), Z.max_degree() + W.max_degree());
  if (const auto big = exact_context(X.ctx(), bound)) {
    const auto lhs = X.as_polynomial_in(*big) * Y.as_polynomial_in(*big);
    const auto rhs = Z.as_polynomial_in(*big) * W.as_polynomial_in(*big);
    return lhs.same_terms(rhs);
  }
  const auto lhs = X * Y, rhs = Z * W;
  return lhs.equal_through(rhs, std::min(lhs.prec(), rhs.prec()));
}

}  // namespace breuil
