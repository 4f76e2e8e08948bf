#pragma once

// Truncated power series in k[[T1, ..., Td]] with total-degree precision.
//
// A series stores its coefficients of total degree <= prec; coefficients
// above prec are unknown, not zero. Every operation computes the largest
// precision that its inputs guarantee.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "breuil/error.hpp"
#include "breuil/ground_field.hpp"
#include "breuil/monomial.hpp"

namespace breuil {

struct RingContext {
  FieldPtr field;
  int d = 1;
  int N = 1;

  RingContext() = default;
  RingContext(FieldPtr f, int vars, int precision) : field(std::move(f)), d(vars), N(precision) {
    if (!field) throw Error(ErrorCode::InvalidInput, "missing field");
    if (d < 1 || d > kMaxVariables) throw Error(ErrorCode::InvalidInput, "number of variables must be in 1..8");
    if (N < 1 || N > 255) throw Error(ErrorCode::InvalidInput, "precision must be in 1..255");
  }

  int p() const noexcept { return static_cast<int>(field->characteristic()); }
  const GroundField& k() const noexcept { return *field; }
  RingContext with_precision(int n) const { return RingContext(field, d, n); }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.d == b.d && a.N == b.N && (a.field == b.field || a.field->same_as(*b.field));
  }
};

using TermMap = std::map<Monomial, FieldElement, GradedLess>;

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(RingContext ctx) : ctx_(std::move(ctx)), prec_(ctx_.N) {}
  TruncatedSeries(RingContext ctx, TermMap terms, int prec) : ctx_(std::move(ctx)), terms_(std::move(terms)), prec_(prec) {
    prec_ = std::min(prec_, ctx_.N);
    normalize();
  }

  static TruncatedSeries zero(const RingContext& ctx) { return TruncatedSeries(ctx); }
  static TruncatedSeries constant(const RingContext& ctx, FieldElement c) {
    return monomial(ctx, Monomial::one(), c);
  }
  static TruncatedSeries constant(const RingContext& ctx, long long c) {
    return constant(ctx, ctx.k().from_int(c));
  }
  static TruncatedSeries monomial(const RingContext& ctx, const Monomial& m, FieldElement c) {
    TermMap t;
    t.emplace(m, c);
    return TruncatedSeries(ctx, std::move(t), ctx.N);
  }
  static TruncatedSeries monomial(const RingContext& ctx, const Monomial& m) { return monomial(ctx, m, ctx.k().one()); }
  /// T_{i+1}.
  static TruncatedSeries variable(const RingContext& ctx, int i) {
    if (i < 0 || i >= ctx.d) throw Error(ErrorCode::VariableOutOfRange, "variable T" + std::to_string(i + 1));
    return monomial(ctx, Monomial::variable(i));
  }

  const RingContext& ctx() const noexcept { return ctx_; }
  const GroundField& k() const noexcept { return *ctx_.field; }
  const TermMap& terms() const noexcept { return terms_; }
  int prec() const noexcept { return prec_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// -1 for the zero series.
  int max_degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  FieldElement coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement{} : it->second;
  }
  FieldElement constant_term() const { return coefficient(Monomial::one()); }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Same series with precision lowered to n (never raised).
  TruncatedSeries truncated(int n) const {
    TruncatedSeries r = *this;
    r.prec_ = std::min(prec_, n);
    r.normalize();
    return r;
  }

  /// Degree-n homogeneous part.
  TermMap homogeneous_part(int n) const {
    TermMap out;
    for (const auto& [m, c] : terms_)
      if (m.degree() == n) out.emplace(m, c);
    return out;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& [m, c] : r.terms_) c = k().neg(c);
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& g) {
    check_ctx(g);
    prec_ = std::min(prec_, g.prec_);
    for (const auto& [m, c] : g.terms_) {
      if (m.degree() > prec_) break;
      auto [it, inserted] = terms_.emplace(m, c);
      if (!inserted) it->second = k().add(it->second, c);
    }
    normalize();
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& g) { return *this += -g; }

  friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) { return f += g; }
  friend TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) { return f -= g; }

  /// Product at precision min(f.prec, g.prec).
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    f.check_ctx(g);
    const int prec = std::min(f.prec_, g.prec_);
    const auto& F = f.k();
    TermMap out;
    for (const auto& [ma, ca] : f.terms_) {
      const int da = ma.degree();
      if (da > prec) break;
      for (const auto& [mb, cb] : g.terms_) {
        if (da + mb.degree() > prec) break;
        const auto c = F.mul(ca, cb);
        auto [it, inserted] = out.emplace(ma * mb, c);
        if (!inserted) it->second = F.add(it->second, c);
      }
    }
    return TruncatedSeries(f.ctx_, std::move(out), prec);
  }
  TruncatedSeries& operator*=(const TruncatedSeries& g) { return *this = *this * g; }

  TruncatedSeries scaled(FieldElement c) const {
    TermMap out;
    for (const auto& [m, a] : terms_) out.emplace(m, k().mul(a, c));
    return TruncatedSeries(ctx_, std::move(out), prec_);
  }

  /// Multiplication by a monomial; exact, so the precision shifts up with it.
  TruncatedSeries times_monomial(const Monomial& mono) const {
    TermMap out;
    for (const auto& [m, a] : terms_) out.emplace(m * mono, a);
    return TruncatedSeries(ctx_, std::move(out), std::min(ctx_.N, prec_ + mono.degree()));
  }

  TruncatedSeries pow(int e) const {
    TruncatedSeries result = constant(ctx_, 1).truncated(prec_);
    TruncatedSeries base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Stored coefficients agree in every degree <= n.
  bool equal_through(const TruncatedSeries& g, int n) const {
    check_ctx(g);
    auto lower = [n](const TermMap& t) {
      TermMap out;
      for (const auto& [m, c] : t) {
        if (m.degree() > n) break;
        out.emplace(m, c);
      }
      return out;
    };
    return lower(terms_) == lower(g.terms_);
  }

  /// Same coefficients and precision.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ctx_ == b.ctx_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
  }

  /// Re-reads the stored coefficients as a polynomial in another context of the
  /// same field and arity, with full precision there. Callers use this only for
  /// data they know to be polynomial.
  TruncatedSeries as_polynomial_in(const RingContext& target) const {
    if (target.d != ctx_.d || !(target.field == ctx_.field || target.field->same_as(*ctx_.field)))
      throw Error(ErrorCode::ContextMismatch, "cannot re-embed into a different ring");
    if (max_degree() > target.N)
      throw Error(ErrorCode::PrecisionTooLow, "polynomial of degree " + std::to_string(max_degree()) +
                                                  " needs precision at least that large");
    return TruncatedSeries(target, terms_, target.N);
  }

  void check_ctx(const TruncatedSeries& g) const {
    if (!(ctx_ == g.ctx_)) throw Error(ErrorCode::ContextMismatch, "series live in different rings");
  }

 private:
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero() || it->first.degree() > prec_)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  RingContext ctx_;
  TermMap terms_;
  int prec_ = 0;
};

struct OrderResult {
  enum class Kind { Known, Above };
  Kind kind = Kind::Above;
  int value = 0;

  static OrderResult known(int i) { return {Kind::Known, i}; }
  static OrderResult above(int prec) { return {Kind::Above, prec}; }
  bool is_known() const noexcept { return kind == Kind::Known; }
  bool operator==(const OrderResult&) const = default;

  std::string to_string() const { return is_known() ? std::to_string(value) : ">" + std::to_string(value); }
};

inline OrderResult ord(const TruncatedSeries& f) {
  if (f.is_zero()) return OrderResult::above(f.prec());
  return OrderResult::known(f.terms().begin()->first.degree());
}

struct HomogeneousForm {
  RingContext ctx;
  int degree = 0;
  TermMap coeffs;

  TruncatedSeries as_series() const { return TruncatedSeries(ctx, coeffs, ctx.N); }
};

inline HomogeneousForm initial_form(const TruncatedSeries& f) {
  const auto o = ord(f);
  if (!o.is_known()) throw Error(ErrorCode::OrderUnknown, "series vanishes through degree " + std::to_string(f.prec()));
  return HomogeneousForm{f.ctx(), o.value, f.homogeneous_part(o.value)};
}

/// Inverse of a unit, exact through f.prec.
inline TruncatedSeries invert_unit(const TruncatedSeries& f) {
  const auto& F = f.k();
  const auto c0 = f.constant_term();
  if (c0.is_zero()) throw Error(ErrorCode::NotAUnit, "series has zero constant term");
  const auto c0_inv = F.inv(c0);
  const int prec = f.prec();
  // g_n = -c0^{-1} * sum_{j=1..n} f_j g_{n-j}, homogeneous degree by degree.
  std::vector<TermMap> g_parts(prec + 1), f_parts(prec + 1);
  for (const auto& [m, c] : f.terms()) f_parts[m.degree()].emplace(m, c);
  g_parts[0].emplace(Monomial::one(), c0_inv);
  for (int n = 1; n <= prec; ++n) {
    TermMap acc;
    for (int j = 1; j <= n; ++j)
      for (const auto& [mf, cf] : f_parts[j])
        for (const auto& [mg, cg] : g_parts[n - j]) {
          auto [it, inserted] = acc.emplace(mf * mg, F.mul(cf, cg));
          if (!inserted) it->second = F.add(it->second, F.mul(cf, cg));
        }
    const auto scale = F.neg(c0_inv);
    for (const auto& [m, c] : acc)
      if (!c.is_zero()) g_parts[n].emplace(m, F.mul(c, scale));
  }
  TermMap out;
  for (auto& part : g_parts) out.insert(part.begin(), part.end());
  return TruncatedSeries(f.ctx(), std::move(out), prec);
}

/// sigma: coefficients to their p-th power and T_i -> T_i^p.
/// Exact through min(N, p*prec + p - 1).
inline TruncatedSeries frobenius_sigma(const TruncatedSeries& f) {
  const int p = f.ctx().p();
  const int prec = std::min(f.ctx().N, p * f.prec() + p - 1);
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() * p > prec) break;
    out.emplace(m.scaled(p), f.k().frobenius(c));
  }
  return TruncatedSeries(f.ctx(), std::move(out), prec);
}

/// Product whose precision uses the orders of the factors:
/// min(f.prec + ord(g), g.prec + ord(f)), capped at N. Sound because the
/// unknown tail of f is multiplied by something of order >= ord(g).
inline TruncatedSeries multiply_sharp(const TruncatedSeries& f, const TruncatedSeries& g) {
  f.check_ctx(g);
  auto lower_order = [](const TruncatedSeries& s) {
    const auto o = ord(s);
    return o.is_known() ? o.value : s.prec() + 1;
  };
  const int prec = std::min(f.ctx().N, std::min(f.prec() + lower_order(g), g.prec() + lower_order(f)));
  const auto& F = f.k();
  TermMap out;
  for (const auto& [ma, ca] : f.terms()) {
    const int da = ma.degree();
    if (da > prec) break;
    for (const auto& [mb, cb] : g.terms()) {
      if (da + mb.degree() > prec) break;
      const auto c = F.mul(ca, cb);
      auto [it, inserted] = out.emplace(ma * mb, c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  }
  return TruncatedSeries(f.ctx(), std::move(out), prec);
}

namespace detail {

// Binomial coefficients mod p up to n.
inline std::vector<std::vector<FieldElement>> binomials(const GroundField& F, int n) {
  std::vector<std::vector<FieldElement>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, F.one());
    for (int j = 1; j < i; ++j) c[i][j] = F.add(c[i - 1][j - 1], c[i - 1][j]);
  }
  return c;
}

}  // namespace detail

/// T2 <- T2 + lambda*T1 (d = 2). Preserves total degree, so the precision is unchanged.
inline TruncatedSeries shear(const TruncatedSeries& f, FieldElement lambda) {
  if (f.ctx().d != 2) throw Error(ErrorCode::UnsupportedDimension, "shear needs two variables");
  const auto& F = f.k();
  const auto binom = detail::binomials(F, std::max(0, f.max_degree()));
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exp[0], b = m.exp[1];
    FieldElement lam_pow = F.one();
    for (int j = 0; j <= b; ++j) {
      const auto coeff = F.mul(c, F.mul(binom[b][j], lam_pow));
      const auto key = Monomial::of({a + j, b - j});
      auto [it, inserted] = out.emplace(key, coeff);
      if (!inserted) it->second = F.add(it->second, coeff);
      lam_pow = F.mul(lam_pow, lambda);
    }
  }
  return TruncatedSeries(f.ctx(), std::move(out), f.prec());
}

/// Exchanges T_{i+1} and T_{j+1}.
inline TruncatedSeries swap_variables(const TruncatedSeries& f, int i = 0, int j = 1) {
  if (i >= f.ctx().d || j >= f.ctx().d) throw Error(ErrorCode::VariableOutOfRange, "swap index");
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    Monomial s = m;
    std::swap(s.exp[i], s.exp[j]);
    out.emplace(s, c);
  }
  return TruncatedSeries(f.ctx(), std::move(out), f.prec());
}

/// Applies a coefficient map (e.g. a field embedding) into a new context.
template <class Map>
TruncatedSeries map_coefficients(const TruncatedSeries& f, const RingContext& target, Map&& map) {
  TermMap out;
  for (const auto& [m, c] : f.terms()) out.emplace(m, map(c));
  return TruncatedSeries(target, std::move(out), std::min(f.prec(), target.N));
}

}  // namespace breuil
