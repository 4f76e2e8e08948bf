#pragma once

// Univariate polynomials over F_q and binary forms in T1, T2: squarefree
// decomposition in characteristic p, linear factors, (p-1)-th power test.

#include <functional>
#include <map>
#include <vector>

#include "breuil/series.hpp"

namespace breuil {

/// Coefficients from the constant term up; no trailing zeros.
using UPoly = std::vector<FieldElement>;

namespace upoly {

inline void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}
inline int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

inline UPoly sub(const GroundField& F, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline UPoly mul(const GroundField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

inline UPoly monic(const GroundField& F, UPoly a) {
  if (a.empty()) return a;
  const auto inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

/// (quotient, remainder); b nonzero.
inline std::pair<UPoly, UPoly> divmod(const GroundField& F, UPoly a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1);
  const auto lead_inv = F.inv(b.back());
  for (int i = degree(a); i >= degree(b); --i) {
    const auto factor = F.mul(a[i], lead_inv);
    if (factor.is_zero()) continue;
    const int shift = i - degree(b);
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(factor, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline UPoly gcd(const GroundField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

inline UPoly derivative(const GroundField& F, const UPoly& a) {
  UPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<long long>(i)), a[i]));
  trim(d);
  return d;
}

// For a polynomial in x^p: the polynomial whose p-th power it is.
inline UPoly pth_root(const GroundField& F, const UPoly& a) {
  const int p = static_cast<int>(F.characteristic());
  UPoly r;
  for (std::size_t i = 0; i < a.size(); i += static_cast<std::size_t>(p)) {
    // x -> x^{p^{m-1}} inverts Frobenius on F_{p^m}.
    auto c = a[i];
    for (std::uint32_t k = 1; k < F.degree(); ++k) c = F.frobenius(c);
    r.push_back(c);
  }
  trim(r);
  return r;
}

inline FieldElement evaluate(const GroundField& F, const UPoly& a, FieldElement x) {
  FieldElement acc = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

}  // namespace upoly

/// Squarefree decomposition: f = lc * prod g_i^i with g_i monic squarefree and
/// pairwise coprime. Returned as multiplicity -> factor (factors of degree 0 omitted).
inline std::map<int, UPoly> squarefree_decomposition(const GroundField& F, const UPoly& f_in) {
  std::map<int, UPoly> out;
  UPoly f = upoly::monic(F, f_in);
  if (upoly::degree(f) <= 0) return out;
  const int p = static_cast<int>(F.characteristic());
  std::function<void(const UPoly&, int)> rec = [&](const UPoly& g, int scale) {
    if (upoly::degree(g) <= 0) return;
    const auto dg = upoly::derivative(F, g);
    if (dg.empty()) {
      rec(upoly::pth_root(F, g), scale * p);
      return;
    }
    auto c = upoly::gcd(F, g, dg);
    auto w = upoly::divmod(F, g, c).first;
    int i = 1;
    while (upoly::degree(w) > 0) {
      auto y = upoly::gcd(F, w, c);
      auto z = upoly::divmod(F, w, y).first;
      if (upoly::degree(z) > 0) {
        auto& slot = out[i * scale];
        slot = slot.empty() ? upoly::monic(F, z) : upoly::mul(F, slot, upoly::monic(F, z));
      }
      w = y;
      c = upoly::divmod(F, c, y).first;
      ++i;
    }
    if (upoly::degree(c) > 0) rec(upoly::pth_root(F, c), scale * p);
  };
  rec(f, 1);
  return out;
}

/// F(1, x) for a binary form F of degree e; the T1-multiplicity is e - deg.
inline UPoly dehomogenize(const HomogeneousForm& F) {
  UPoly f(F.degree + 1);
  for (const auto& [m, c] : F.coeffs) f[m.exp[1]] = c;
  upoly::trim(f);
  return f;
}

/// A linear factor l = alpha T1 + beta T2 of a binary form and its multiplicity.
struct LinearFactor {
  FieldElement alpha, beta;
  int multiplicity = 0;
};

/// Linear factors over k in a fixed order: T1 first (as the factor at
/// infinity of F(1, x)), then T2 - r T1 for the roots r in power order.
inline std::vector<LinearFactor> linear_factors(const HomogeneousForm& form) {
  if (form.ctx.d != 2) throw Error(ErrorCode::UnsupportedDimension, "binary forms need two variables");
  const auto& F = form.ctx.k();
  const auto f = dehomogenize(form);
  std::vector<LinearFactor> out;
  const int at_infinity = form.degree - upoly::degree(f);
  if (at_infinity > 0) out.push_back({F.one(), F.zero(), at_infinity});
  for (auto r : F.elements_in_power_order()) {
    int mult = 0;
    UPoly g = f;
    const UPoly lin{F.neg(r), F.one()};
    while (upoly::degree(g) > 0) {
      auto [q, rem] = upoly::divmod(F, g, lin);
      if (!rem.empty()) break;
      g = std::move(q);
      ++mult;
    }
    if (mult > 0) out.push_back({F.neg(r), F.one(), mult});
  }
  return out;
}

enum class PowerTest { IsPower, NotPower, Unknown };

inline const char* to_string(PowerTest t) {
  switch (t) {
    case PowerTest::IsPower: return "is_power";
    case PowerTest::NotPower: return "not_power";
    default: return "unknown";
  }
}

/// Whether the binary form is a constant times a (p-1)-th power: every
/// multiplicity in its squarefree decomposition, the T1 part included, is
/// divisible by p-1.
inline PowerTest initial_form_pm1_power_test(const HomogeneousForm& form) {
  if (form.ctx.d != 2) return PowerTest::Unknown;
  const int n = form.ctx.p() - 1;
  if (form.degree % n != 0) return PowerTest::NotPower;
  const auto& F = form.ctx.k();
  const auto f = dehomogenize(form);
  if ((form.degree - upoly::degree(f)) % n != 0) return PowerTest::NotPower;
  for (const auto& [mult, factor] : squarefree_decomposition(F, f))
    if (mult % n != 0) return PowerTest::NotPower;
  return PowerTest::IsPower;
}

}  // namespace breuil
