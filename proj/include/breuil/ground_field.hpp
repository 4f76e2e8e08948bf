#pragma once

// Finite fields F_{p^m} in the polynomial basis 1, w, ..., w^{m-1}.
//
// An element is packed as the integer sum c_i p^i of its coordinates, so the
// prime subfield is exactly the codes 0..p-1. Multiplication goes through
// discrete log tables built once per field.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "breuil/error.hpp"

namespace breuil {

struct FieldElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, low coefficient first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = static_cast<std::uint32_t>(std::uint64_t{result} * base % p);
    base = static_cast<std::uint32_t>(std::uint64_t{base} * base % p);
    e >>= 1;
  }
  return result;
}

// Remainder of a modulo b over F_p; b nonzero.
inline PrimePoly poly_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - factor} * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g(k + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[k] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class GroundField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds F_{p^m}. Without a modulus, the lexicographically first monic
  /// irreducible of degree m is used (lower coefficients read as base-p digits).
  static std::shared_ptr<const GroundField> make(std::uint32_t p, std::uint32_t m = 1,
                                                 std::optional<std::vector<std::uint32_t>> modulus = {}) {
    return std::shared_ptr<const GroundField>(new GroundField(p, m, std::move(modulus)));
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// The class of w in F_p[w]/(modulus); equals the integer p when m = 1 and so reduces to 0.
  FieldElement generator() const noexcept { return m_ == 1 ? FieldElement{0} : FieldElement{p_}; }
  /// A generator of the cyclic group F_q^*.
  FieldElement primitive_element() const noexcept { return {exp_[1]}; }

  FieldElement from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElement from_coordinates(const std::vector<std::uint32_t>& coords) const {
    std::uint32_t code = 0, scale = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      const std::uint32_t c = i < coords.size() ? coords[i] % p_ : 0;
      code += c * scale;
      scale *= p_;
    }
    return {code};
  }

  std::vector<std::uint32_t> coordinates(FieldElement a) const {
    std::vector<std::uint32_t> out(m_);
    std::uint32_t c = a.code;
    for (std::uint32_t i = 0; i < m_; ++i) {
      out[i] = c % p_;
      c /= p_;
    }
    return out;
  }

  bool in_prime_field(FieldElement a) const noexcept { return a.code < p_; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (m_ == 1) return {(a.code + b.code) % p_};
    if (p_ == 2) return {a.code ^ b.code};
    std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      out += ((x % p_ + y % p_) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElement neg(FieldElement a) const noexcept {
    if (m_ == 1) return {(p_ - a.code) % p_};
    if (p_ == 2) return a;
    std::uint32_t x = a.code, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      out += ((p_ - x % p_) % p_) * scale;
      x /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.code == 0 || b.code == 0) return {0};
    if (m_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    return {exp_[log_[a.code] + log_[b.code]]};
  }

  FieldElement inv(FieldElement a) const {
    if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
    return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    return {exp_[(std::uint64_t{log_[a.code]} * (e % (q_ - 1))) % (q_ - 1)]};
  }

  /// x -> x^p.
  FieldElement frobenius(FieldElement a) const noexcept { return pow(a, p_); }

  /// All elements: 0, then the powers 1, g, g^2, ... of the primitive element.
  std::vector<FieldElement> elements_in_power_order() const {
    std::vector<FieldElement> out{zero()};
    for (std::uint32_t i = 0; i + 1 < q_; ++i) out.push_back({exp_[i]});
    return out;
  }

  /// Some y with y^k = a, or nothing.
  std::optional<FieldElement> root(FieldElement a, std::uint64_t k) const {
    if (a.is_zero()) return zero();
    for (auto y : elements_in_power_order())
      if (!y.is_zero() && pow(y, k) == a) return y;
    return std::nullopt;
  }

  /// Integers for m = 1, otherwise a polynomial in w such as "2*w+1".
  std::string to_string(FieldElement a) const {
    if (m_ == 1 || in_prime_field(a)) return std::to_string(a.code);
    const auto c = coordinates(a);
    std::string out;
    for (std::uint32_t i = m_; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c[i]);
        continue;
      }
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  bool same_as(const GroundField& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  GroundField(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) : p_(p), m_(m) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(ErrorCode::InvalidInput, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxOrder) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 65536");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (m == 1) {
      modulus_ = {0, 1};
    } else if (modulus) {
      modulus_ = *modulus;
      for (auto& c : modulus_) c %= p;
      detail::trim(modulus_);
      if (modulus_.size() != m + 1 || modulus_.back() != 1)
        throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
      if (!detail::is_irreducible(modulus_, p))
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    } else {
      modulus_ = first_irreducible(p, m);
    }
    build_tables();
  }

  static std::vector<std::uint32_t> first_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      detail::PrimePoly f(m + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[m] = 1;
      if (detail::is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");  // unreachable for primes
  }

  // Product in F_p[w]/(modulus), used only while building the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    const auto ca = coordinates({a}), cb = coordinates({b});
    detail::PrimePoly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    const auto r = detail::poly_rem(prod, modulus_, p_);
    return from_coordinates(r).code;
  }

  void build_tables() {
    exp_.assign(2 * q_, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
      exp_[0] = exp_[1] = exp_[2] = exp_[3] = 1;
      return;
    }
    for (std::uint32_t g = 2; g < q_; ++g) {
      std::uint32_t x = 1, order = 0;
      do {
        x = slow_mul(x, g);
        ++order;
      } while (x != 1 && order < q_);
      if (order != q_ - 1) continue;
      x = 1;
      for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, g);
      }
      for (std::uint32_t i = q_ - 1; i < 2 * q_; ++i) exp_[i] = exp_[i - (q_ - 1)];
      return;
    }
  }

  std::uint32_t p_, m_, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_, log_;
};

using FieldPtr = std::shared_ptr<const GroundField>;

inline FieldPtr make_field(std::uint32_t p, std::uint32_t m = 1,
                           std::optional<std::vector<std::uint32_t>> modulus = {}) {
  return GroundField::make(p, m, std::move(modulus));
}

/// Embedding F_{p^a} -> F_{p^b} for a | b, sending w to the least (by code)
/// root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0)
      throw Error(ErrorCode::InvalidInput, "no embedding between these fields");
    if (from_->degree() == 1) return;
    const auto& mod = from_->modulus();
    for (std::uint32_t code = 0; code < to_->order(); ++code) {
      FieldElement x{code}, acc = to_->zero();
      for (std::size_t i = mod.size(); i-- > 0;) acc = to_->add(to_->mul(acc, x), to_->from_int(mod[i]));
      if (acc.is_zero()) {
        image_of_w_ = x;
        return;
      }
    }
    throw Error(ErrorCode::InvalidInput, "source modulus has no root in target field");
  }

  FieldElement operator()(FieldElement a) const {
    if (from_->degree() == 1) return a;
    const auto coords = from_->coordinates(a);
    FieldElement acc = to_->zero();
    for (std::size_t i = coords.size(); i-- > 0;) acc = to_->add(to_->mul(acc, image_of_w_), to_->from_int(coords[i]));
    return acc;
  }

  const FieldPtr& target() const noexcept { return to_; }

 private:
  FieldPtr from_, to_;
  FieldElement image_of_w_{};
};

}  // namespace breuil
