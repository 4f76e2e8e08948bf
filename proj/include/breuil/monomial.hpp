#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "breuil/error.hpp"

namespace breuil {

inline constexpr int kMaxVariables = 8;

/// Exponent vector (a_1, ..., a_d) of T_1^{a_1} ... T_d^{a_d}.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};

  static Monomial one() { return {}; }
  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.exp[i] = static_cast<std::uint16_t>(power);
    return m;
  }
  static Monomial of(std::initializer_list<int> exps) {
    Monomial m;
    int i = 0;
    for (int e : exps) m.exp[i++] = static_cast<std::uint16_t>(e);
    return m;
  }

  int degree() const noexcept {
    int s = 0;
    for (auto e : exp) s += e;
    return s;
  }

  bool divides(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVariables; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
    return r;
  }

  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
    return r;
  }

  Monomial scaled(int k) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] * k);
    return r;
  }

  std::uint64_t key() const noexcept {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxVariables; ++i) k = (k << 8) | (exp[i] & 0xffu);
    return k;
  }

  bool operator==(const Monomial&) const = default;
};

/// Graded order: total degree first, then T1^2 < T1*T2 < T2^2 within a degree.
struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exp.begin(), b.exp.end(), a.exp.begin(), a.exp.end());
  }
};

/// Calls f on every monomial in d variables of total degree exactly n, in graded order.
inline void for_each_monomial_of_degree(int d, int n, const std::function<void(const Monomial&)>& f) {
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == d - 1) {
      m.exp[var] = static_cast<std::uint16_t>(left);
      f(m);
      m.exp[var] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      m.exp[var] = static_cast<std::uint16_t>(a);
      rec(var + 1, left - a);
    }
    m.exp[var] = 0;
  };
  rec(0, n);
}

/// All monomials of total degree <= max_degree in graded order, with index lookup.
class MonomialBasis {
 public:
  MonomialBasis(int d, int max_degree) : d_(d), max_degree_(max_degree) {
    if (max_degree > 255) throw Error(ErrorCode::InvalidInput, "degree too large for monomial basis");
    for (int n = 0; n <= max_degree; ++n) {
      degree_start_.push_back(static_cast<int>(monos_.size()));
      for_each_monomial_of_degree(d, n, [&](const Monomial& m) {
        index_.emplace(m.key(), static_cast<int>(monos_.size()));
        monos_.push_back(m);
      });
    }
    degree_start_.push_back(static_cast<int>(monos_.size()));
  }

  int size() const noexcept { return static_cast<int>(monos_.size()); }
  int variables() const noexcept { return d_; }
  int max_degree() const noexcept { return max_degree_; }
  const Monomial& operator[](int i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  int degree_begin(int n) const { return degree_start_[n]; }
  int degree_end(int n) const { return degree_start_[n + 1]; }

  /// -1 when the monomial is beyond max_degree.
  int index_of(const Monomial& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
  }

 private:
  int d_, max_degree_;
  std::vector<Monomial> monos_;
  std::vector<int> degree_start_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Monomial ideal in k[[T1..Td]] given by generator exponent vectors.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int d, std::vector<Monomial> gens) : d_(d), gens_(std::move(gens)) { minimize(); }

  int variables() const noexcept { return d_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool contains(const Monomial& m) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// Finite colength iff every variable has a pure power among the generators.
  bool is_m_primary() const noexcept {
    for (int i = 0; i < d_; ++i) {
      bool found = false;
      for (const auto& g : gens_) {
        bool pure = g.exp[i] > 0;
        for (int j = 0; j < d_ && pure; ++j)
          if (j != i && g.exp[j] != 0) pure = false;
        if (pure) found = true;
      }
      if (!found) return false;
    }
    return d_ > 0;
  }

  /// Monomials outside the ideal, graded order. Requires is_m_primary().
  std::vector<Monomial> standard_monomials() const {
    if (!is_m_primary()) throw Error(ErrorCode::IllFormedPresentation, "monomial ideal is not m-primary");
    std::vector<Monomial> out;
    int bound = 0;
    for (const auto& g : gens_) bound = std::max(bound, g.degree());
    // Each standard monomial has every exponent below the pure-power bound, so degree < d*bound.
    for (int n = 0; n <= d_ * bound; ++n)
      for_each_monomial_of_degree(d_, n, [&](const Monomial& m) {
        if (!contains(m)) out.push_back(m);
      });
    return out;
  }

  int colength() const { return static_cast<int>(standard_monomials().size()); }

  /// Largest total degree of a standard monomial, -1 for the unit ideal.
  int max_standard_degree() const {
    int best = -1;
    for (const auto& m : standard_monomials()) best = std::max(best, m.degree());
    return best;
  }

  /// The ideal generated by p-th powers of the generators.
  MonomialIdeal frobenius_power(int p) const {
    std::vector<Monomial> g;
    for (const auto& m : gens_) g.push_back(m.scaled(p));
    return MonomialIdeal(d_, std::move(g));
  }

  bool operator==(const MonomialIdeal& o) const { return d_ == o.d_ && gens_ == o.gens_; }

 private:
  void minimize() {
    std::vector<Monomial> kept;
    std::sort(gens_.begin(), gens_.end(), GradedLess{});
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    for (const auto& g : gens_)
      if (std::none_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); })) kept.push_back(g);
    gens_ = std::move(kept);
  }

  int d_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace breuil
