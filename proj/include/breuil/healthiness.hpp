#pragma once

// Diagnosis of R = W(k)[[T1..Td]]/(p - h) from hbar = h mod p.

#include <optional>
#include <string>
#include <vector>

#include "breuil/binary_forms.hpp"
#include "breuil/ideal_membership.hpp"
#include "breuil/t4.hpp"

namespace breuil {

enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

struct Verdict {
  OrderResult e;
  Tri quasi_healthy = Tri::Unknown;
  Tri p_quasi_healthy = Tri::Unknown;
  std::vector<std::string> rules;
  std::optional<CounterexampleBundle> witness;
  std::vector<std::string> notes;
};

/// Membership of hbar in (T1^p, T2^p, T1^{p-1} T2^{p-1}); exact once prec >= 2p-3.
inline MembershipResult lemma2_ideal_test(const TruncatedSeries& hbar) {
  if (hbar.ctx().d != 2) throw Error(ErrorCode::UnsupportedDimension, "the ideal test is for d = 2");
  const int p = hbar.ctx().p();
  if (hbar.prec() < 2 * p - 3)
    throw Error(ErrorCode::PrecisionTooLow, "ideal membership needs precision >= " + std::to_string(2 * p - 3));
  return monomial_ideal_membership(hbar, lemma2_ideal(p));
}

struct Partition {
  std::vector<int> first, second;  // indices into the exponent list
  int m1 = 0, m2 = 0;
};

/// A split of the exponents into I1, I2 with sum(I1) in [1, p-1] and
/// sum(I2) in [0, p-2]. Subset-sum table over the exponents; the smallest
/// feasible m1 is used, and items are taken greedily from the front when
/// rebuilding the subset.
inline std::optional<Partition> partition_search(const std::vector<int>& e, int p) {
  const int m = static_cast<int>(e.size());
  int S = 0;
  for (int x : e) {
    if (x < 1) throw Error(ErrorCode::InvalidInput, "exponents must be positive");
    S += x;
  }
  if (m == 0) return std::nullopt;
  // reach[i][s]: some subset of e[i..m-1] sums to s.
  std::vector<std::vector<char>> reach(m + 1, std::vector<char>(S + 1, 0));
  reach[m][0] = 1;
  for (int i = m - 1; i >= 0; --i)
    for (int s = 0; s <= S; ++s) reach[i][s] = reach[i + 1][s] || (s >= e[i] && reach[i + 1][s - e[i]]);
  const int lo = std::max(1, S - (p - 2)), hi = std::min(p - 1, S);
  for (int m1 = lo; m1 <= hi; ++m1) {
    if (!reach[0][m1]) continue;
    Partition out;
    out.m1 = m1;
    out.m2 = S - m1;
    int left = m1;
    for (int i = 0; i < m; ++i) {
      if (left >= e[i] && reach[i + 1][left - e[i]]) {
        out.first.push_back(i);
        left -= e[i];
      } else {
        out.second.push_back(i);
      }
    }
    return out;
  }
  return std::nullopt;
}

namespace detail {

inline Verdict yes_yes(OrderResult e, const std::string& rule) {
  Verdict v;
  v.e = e;
  v.quasi_healthy = v.p_quasi_healthy = Tri::Yes;
  v.rules = {rule};
  return v;
}

inline Verdict no_no(OrderResult e, CounterexampleBundle bundle) {
  Verdict v;
  v.e = e;
  v.quasi_healthy = v.p_quasi_healthy = Tri::No;
  v.rules = {std::string("T4") + to_string(bundle.kind)};
  v.witness = std::move(bundle);
  return v;
}

inline TruncatedSeries linear_form(const RingContext& ctx, FieldElement alpha, FieldElement beta) {
  return TruncatedSeries::variable(ctx, 0).scaled(alpha) + TruncatedSeries::variable(ctx, 1).scaled(beta);
}

// Divisibility test used before attempting a construction.
inline bool divides_at_precision(const TruncatedSeries& f, const TruncatedSeries& hbar) {
  bool exact = false;
  return divides_hbar(f, hbar, exact);
}

// T4 shapes read off the linear factors of the initial form: a factor u of
// multiplicity >= p with u^p | hbar (case i), else two distinct factors u, v
// of multiplicity >= p-1 with (uv)^{p-1} | hbar (case ii).
inline std::optional<CounterexampleBundle> detect_t4(const TruncatedSeries& hbar, std::vector<std::string>& notes) {
  const auto& ctx = hbar.ctx();
  const int p = ctx.p();
  const auto& F = ctx.k();
  const auto factors = linear_factors(initial_form(hbar));
  for (const auto& f : factors) {
    if (f.multiplicity < p) continue;
    const auto u = linear_form(ctx, f.alpha, f.beta);
    if (!divides_at_precision(u.pow(p), hbar)) continue;
    const auto t = f.beta.is_zero() ? TruncatedSeries::variable(ctx, 1) : TruncatedSeries::variable(ctx, 0);
    T4Params P;
    P.kind = T4Case::i;
    P.t = t;
    P.u = u;
    P.hbar = hbar;
    notes.push_back("case i with u = " + to_string(u) + ", t = " + to_string(t));
    return t4_build(P, ctx);
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i].multiplicity < p - 1 || factors[j].multiplicity < p - 1) continue;
      const auto u = linear_form(ctx, factors[i].alpha, factors[i].beta);
      const auto v = linear_form(ctx, factors[j].alpha, factors[j].beta);
      if (!divides_at_precision((u * v).pow(p - 1), hbar)) continue;
      T4Params P;
      P.kind = T4Case::ii;
      P.u = u;
      P.v = v;
      P.hbar = hbar;
      notes.push_back("case ii with u = " + to_string(u) + ", v = " + to_string(v));
      return t4_build(P, ctx);
    }
  (void)F;
  return std::nullopt;
}

// Images of hbar under T_i -> T1, T2 or 0 (both T1 and T2 hit); the first
// image outside the ideal, in base-3 counting order of the assignment.
inline std::optional<std::string> find_projection(const TruncatedSeries& hbar) {
  const auto& ctx = hbar.ctx();
  const int d = ctx.d;
  const RingContext ctx2(ctx.field, 2, ctx.N);
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> target(d);
    bool has1 = false, has2 = false;
    for (int i = 0, c = code; i < d; ++i, c /= 3) {
      target[i] = c % 3;  // 0: T1, 1: T2, 2: zero
      has1 = has1 || target[i] == 0;
      has2 = has2 || target[i] == 1;
    }
    if (!has1 || !has2) continue;
    TermMap out;
    for (const auto& [m, c] : hbar.terms()) {
      Monomial image;
      bool killed = false;
      for (int i = 0; i < d; ++i) {
        if (m.exp[i] == 0) continue;
        if (target[i] == 2) {
          killed = true;
          break;
        }
        image.exp[target[i]] = static_cast<std::uint16_t>(image.exp[target[i]] + m.exp[i]);
      }
      if (killed) continue;
      auto [it, inserted] = out.emplace(image, c);
      if (!inserted) it->second = ctx.k().add(it->second, c);
    }
    const TruncatedSeries h2(ctx2, std::move(out), hbar.prec());
    if (lemma2_ideal_test(h2).is_not_in()) {
      std::string desc;
      for (int i = 0; i < d; ++i) {
        if (i) desc += ", ";
        desc += "T" + std::to_string(i + 1) + "->" + (target[i] == 0 ? "T1" : target[i] == 1 ? "T2" : "0");
      }
      return desc + " gives " + to_string(h2);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// hbar = T1^e1 T2^e2 over F_p. Never Unknown.
inline Verdict monomial_classify(int p, int e1, int e2) {
  if (e1 < 0 || e2 < 0 || e1 + e2 < 1) throw Error(ErrorCode::InvalidInput, "need e1 + e2 >= 1");
  const RingContext ctx(make_field(static_cast<std::uint32_t>(p)), 2, std::max({2 * p, e1 + e2, 1}));
  const auto h = TruncatedSeries::monomial(ctx, Monomial::of({e1, e2}));
  const auto e = ord(h);
  if (lemma2_ideal_test(h).is_not_in()) return detail::yes_yes(e, "Thm1");
  const auto T1 = TruncatedSeries::variable(ctx, 0), T2 = TruncatedSeries::variable(ctx, 1);
  T4Params P;
  P.hbar = h;
  if (e1 >= p || e2 >= p) {
    P.kind = T4Case::i;
    P.u = e1 >= p ? T1 : T2;
    P.t = e1 >= p ? T2 : T1;
  } else {
    P.kind = T4Case::ii;
    P.u = T1;
    P.v = T2;
  }
  return detail::no_no(e, t4_build(P, ctx));
}

/// Supplied factorisation witnesses for the T4 constructions.
struct DiagnoseHints {
  std::optional<T4Params> t4;
};

/// The decision cascade: the ideal test (d = 2), the order bound e <= p-1,
/// monomial partitions and coordinate projections (d >= 3), T4 shapes (d = 2),
/// else Unknown.
inline Verdict diagnose(const TruncatedSeries& h, const DiagnoseHints& hints = {}) {
  const auto& ctx = h.ctx();
  const int p = ctx.p(), d = ctx.d;
  if (d == 1) throw Error(ErrorCode::UnsupportedDimension, "d = 1 is not diagnosed (see the p11 command)");
  Verdict v;
  v.e = ord(h);
  if (!v.e.is_known()) {
    v.notes.push_back("PrecisionTooLow: hbar vanishes through degree " + std::to_string(h.prec()) + "; raise --precision");
    return v;
  }
  if (v.e.value == 0) throw Error(ErrorCode::InvalidInput, "h must lie in the maximal ideal (it has a constant term)");
  const int e = v.e.value;

  if (d == 2) {
    const auto mem = lemma2_ideal_test(h);
    if (mem.is_not_in()) {
      auto out = detail::yes_yes(v.e, "Thm1");
      out.notes.push_back("hbar has the monomial " + monomial_to_string(*mem.witness, 2) +
                          " outside (T1^p, T2^p, T1^(p-1)*T2^(p-1))");
      return out;
    }
    v.notes.push_back("hbar lies in (T1^p, T2^p, T1^(p-1)*T2^(p-1))");
  }
  if (e <= p - 1) {
    v.quasi_healthy = Tri::Yes;
    v.rules.push_back("CorT2");
    if (d == 2) v.p_quasi_healthy = Tri::Yes;
    v.notes.push_back("e = " + std::to_string(e) + " <= p-1");
    return v;
  }
  if (d >= 3) {
    if (h.is_monomial()) {
      const auto mono = h.terms().begin()->first;
      std::vector<int> exps, vars;
      for (int i = 0; i < d; ++i)
        if (mono.exp[i] > 0) {
          exps.push_back(mono.exp[i]);
          vars.push_back(i);
        }
      if (const auto part = partition_search(exps, p)) {
        v.quasi_healthy = Tri::Yes;
        v.rules.push_back("Sec6-partition");
        std::string a, b;
        for (int i : part->first) a += (a.empty() ? "" : ",") + std::string("T") + std::to_string(vars[i] + 1);
        for (int i : part->second) b += (b.empty() ? "" : ",") + std::string("T") + std::to_string(vars[i] + 1);
        v.notes.push_back("I1 = {" + a + "} (m1 = " + std::to_string(part->m1) + "), I2 = {" + b + "} (m2 = " +
                          std::to_string(part->m2) + ")");
        v.notes.push_back("p_quasi_healthy is not decided for d >= 3");
        return v;
      }
      v.notes.push_back("no partition of the exponents with m1 in [1, p-1] and m2 in [0, p-2]");
    }
    if (const auto proj = detail::find_projection(h)) {
      v.quasi_healthy = Tri::Yes;
      v.rules.push_back("Thm1-projection");
      v.notes.push_back("projection " + *proj + ", outside the ideal");
      v.notes.push_back("p_quasi_healthy is not decided for d >= 3");
      return v;
    }
    v.notes.push_back("no rule applies; a quotient onto W(k)[[T1,T2]]/(p - h') with h' outside the ideal would decide quasi-healthiness");
    return v;
  }

  // d = 2, hbar inside the ideal, e >= p.
  std::vector<std::string> notes = v.notes;
  if (hints.t4) {
    T4Params P = *hints.t4;
    P.hbar = h;
    auto out = detail::no_no(v.e, t4_build(P, ctx));
    out.notes = notes;
    out.notes.push_back("construction from the supplied witnesses");
    return out;
  }
  if (auto bundle = detail::detect_t4(h, notes)) {
    auto out = detail::no_no(v.e, std::move(*bundle));
    out.notes = notes;
    return out;
  }
  v.notes = notes;
  v.notes.push_back("no T4 shape found among the linear factors of the initial form; supply --case with --t/--u, --u/--v or --a/--b/--c");
  v.notes.push_back("conjecture (unproved): p-quasi-healthy iff hbar lies outside (T1^p, T2^p, T1^(p-1)*T2^(p-1)); this hbar lies inside");
  return v;
}

/// key=value lines.
inline std::string verdict_keys(const Verdict& v) {
  std::string rules;
  for (const auto& r : v.rules) rules += (rules.empty() ? "" : ",") + r;
  std::string out = "e=" + v.e.to_string() + "\n";
  out += std::string("quasi_healthy=") + to_string(v.quasi_healthy) + "\n";
  out += std::string("p_quasi_healthy=") + to_string(v.p_quasi_healthy) + "\n";
  out += "rules=" + rules + "\n";
  return out;
}

/// Human-readable summary.
inline std::string verdict_text(const Verdict& v) {
  std::string out = "order of hbar: " + v.e.to_string() + "\n";
  out += std::string("quasi-healthy: ") + to_string(v.quasi_healthy) + "\n";
  out += std::string("p-quasi-healthy: ") + to_string(v.p_quasi_healthy) + "\n";
  for (const auto& n : v.notes) out += "note: " + n + "\n";
  if (v.witness) {
    const auto& c = v.witness->checks;
    out += std::string("counterexample: case ") + to_string(v.witness->kind) + ", ranks " +
           std::to_string(v.witness->M1.rank()) + " -> " + std::to_string(v.witness->M2.rank()) + "\n";
    out += "  alpha = (";
    for (int j = 0; j < v.witness->alpha.U.cols(); ++j) out += (j ? ", " : "") + to_string(v.witness->alpha.U(0, j));
    out += ")\n";
    out += std::string("  morphism identity: ") + (c.morphism_identity ? "ok" : "FAILED") + "\n";
    out += std::string("  certificate identities: ") + (c.certificate_identities ? "ok" : "FAILED") + "\n";
    out += std::string("  cokernel of finite length: ") + (c.coker_finite_length ? "ok (r^" + std::to_string(c.coker_bound) + " kills it)" : "FAILED") + "\n";
    out += std::string("  alpha not surjective: ") + (c.non_surjective ? "ok" : "FAILED") + "\n";
    if (c.divisibility_precision >= 0)
      out += "  divisibility of hbar checked at precision " + std::to_string(c.divisibility_precision) + "\n";
  }
  return out;
}

}  // namespace breuil
