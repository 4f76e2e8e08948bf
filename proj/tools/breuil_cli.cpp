// Command-line front end. Exit codes: 0 determined, 2 undetermined, 1 error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "breuil/breuil.hpp"

namespace {

using namespace breuil;

struct FieldOptions {
  int p = 0;
  int m = 1;
  int precision = 0;  // 0: choose automatically
};

void add_field_options(CLI::App* cmd, FieldOptions& f) {
  cmd->add_option("--p", f.p, "characteristic")->required()->check(CLI::Range(2, 65536));
  cmd->add_option("--m", f.m, "degree of k over F_p")->check(CLI::Range(1, 16));
  cmd->add_option("--precision", f.precision, "working precision N")->check(CLI::Range(1, 255));
}

FieldPtr field_of(const FieldOptions& f) {
  return make_field(static_cast<std::uint32_t>(f.p), static_cast<std::uint32_t>(f.m));
}

// Default N = max(2p, 2 ord(h), deg h), so polynomial input is kept whole.
RingContext context_for(const FieldOptions& f, int d, const std::string& h) {
  const auto F = field_of(f);
  if (f.precision > 0) return RingContext(F, d, f.precision);
  const RingContext wide(F, d, 255);
  const auto s = parse_series(h, wide);
  const auto o = ord(s);
  int N = 2 * f.p;
  if (o.is_known()) N = std::max(N, 2 * o.value);
  N = std::max(N, s.max_degree());
  return RingContext(F, d, std::min(255, N));
}

struct HintOptions {
  std::string kind, t, u, v, a, b, c;
};

void add_hint_options(CLI::App* cmd, HintOptions& h) {
  cmd->add_option("--case", h.kind, "T4 case: i, ii or iii")->check(CLI::IsMember({"i", "ii", "iii"}));
  cmd->add_option("--t", h.t, "case i: t");
  cmd->add_option("--u", h.u, "case i/ii: u");
  cmd->add_option("--v", h.v, "case ii: v");
  cmd->add_option("--a", h.a, "case iii: a");
  cmd->add_option("--b", h.b, "case iii: b");
  cmd->add_option("--c", h.c, "case iii: c");
}

std::optional<T4Params> hints_to_params(const HintOptions& h, const RingContext& ctx) {
  if (h.kind.empty()) return std::nullopt;
  T4Params P;
  P.kind = parse_t4_case(h.kind);
  auto opt = [&](const std::string& s) -> std::optional<TruncatedSeries> {
    if (s.empty()) return std::nullopt;
    return parse_series(s, ctx);
  };
  P.t = opt(h.t);
  P.u = opt(h.u);
  P.v = opt(h.v);
  P.a = opt(h.a);
  P.b = opt(h.b);
  P.c = opt(h.c);
  return P;
}

std::string write_bundle(const CounterexampleBundle& B, const std::string& stem) {
  const std::string m1 = stem + "_M1.bmod", m2 = stem + "_M2.bmod", al = stem + "_alpha.bmor";
  write_text_file(m1, write_module(B.M1));
  write_text_file(m2, write_module(B.M2));
  write_text_file(al, write_morphism(B.alpha.U));
  return m1 + "," + m2 + "," + al;
}

std::string checks_keys(const BundleChecks& c) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "morphism_identity=" << yn(c.morphism_identity) << "\n";
  out << "certificate_identities=" << yn(c.certificate_identities) << "\n";
  out << "coker_finite_length=" << yn(c.coker_finite_length) << "\n";
  out << "non_surjective=" << yn(c.non_surjective) << "\n";
  return out.str();
}

std::string matrix_text(const SeriesMatrix& M) {
  std::string out;
  for (int i = 0; i < M.rows(); ++i) {
    out += "  [";
    for (int j = 0; j < M.cols(); ++j) out += (j ? "; " : "") + to_string(M(i, j));
    out += "]\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Breuil modules killed by p and healthiness of W(k)[[T1..Td]]/(p - h)"};
  app.require_subcommand(1);
  // --h is the series h, so help is only reachable as --help.
  app.set_help_flag("--help", "print this help");

  // diagnose
  FieldOptions dfo;
  HintOptions dho;
  int dd = 2;
  std::string dh, dout = "witness";
  auto* diag = app.add_subcommand("diagnose", "decide (p-)quasi-healthiness of W(k)[[T1..Td]]/(p - h)");
  diag->set_help_flag("--help", "print this help");
  add_field_options(diag, dfo);
  diag->add_option("--d", dd, "number of variables")->check(CLI::Range(1, 8));
  diag->add_option("--h", dh, "the series h")->required();
  diag->add_option("--out", dout, "prefix for witness files");
  add_hint_options(diag, dho);

  // counterexample
  FieldOptions cfo;
  HintOptions cho;
  std::string ch, cout_stem = "witness";
  auto* cex = app.add_subcommand("counterexample", "build and verify a T4 counterexample bundle");
  cex->set_help_flag("--help", "print this help");
  add_field_options(cex, cfo);
  add_hint_options(cex, cho);
  cex->get_option("--case")->required();
  cex->add_option("--h", ch, "hbar (defaults to the case's own)");
  cex->add_option("--out", cout_stem, "prefix for witness files");

  // validate
  std::string vmod, vtarget, vmor;
  auto* val = app.add_subcommand("validate", "validate a .bmod module, optionally a morphism into another");
  val->set_help_flag("--help", "print this help");
  val->add_option("--module", vmod, "module file")->required();
  val->add_option("--target", vtarget, "target module file");
  val->add_option("--morphism", vmor, "morphism file (.bmor)");

  // dualize
  std::string dumod, duout;
  auto* dua = app.add_subcommand("dualize", "dual module (A' = B^T, certificate (A^T, f))");
  dua->set_help_flag("--help", "print this help");
  dua->add_option("--module", dumod, "module file")->required();
  dua->add_option("--out", duout, "output file (default: standard output)");

  // oracle
  FieldOptions ofo;
  std::string oh;
  int ocol = 4, odeg = 3;
  long long obudget = kDefaultOracleBudget;
  auto* orc = app.add_subcommand("oracle", "exhaustive search for finite-length pairs (C, phi)");
  orc->set_help_flag("--help", "print this help");
  add_field_options(orc, ofo);
  orc->add_option("--h", oh, "hbar in k[[T1,T2]]")->required();
  orc->add_option("--max-colength", ocol, "bound on length(C)")->check(CLI::Range(1, 8));
  orc->add_option("--max-degree", odeg, "bound on each exponent in the entries of phi")->check(CLI::Range(0, 32));
  orc->add_option("--budget", obudget, "maximal number of phi candidates")->check(CLI::PositiveNumber);

  // p11
  FieldOptions pfo;
  std::string pg;
  int pe = -1;
  auto* p11 = app.add_subcommand("p11", "morphisms into mu_p over k[[T]]: solve g a = sigma(a) T^(p-1)");
  p11->set_help_flag("--help", "print this help");
  add_field_options(p11, pfo);
  p11->add_option("--g", pg, "the series g in T")->required();
  p11->add_option("--e", pe, "ramification index (default p-1)")->check(CLI::Range(1, 255));

  // prepare
  FieldOptions rfo;
  std::string rh;
  auto* prep = app.add_subcommand("prepare", "normalise by a shear and apply Weierstrass preparation");
  prep->set_help_flag("--help", "print this help");
  add_field_options(prep, rfo);
  prep->add_option("--h", rh, "series in k[[T1,T2]]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*diag) {
      const auto ctx = context_for(dfo, dd, dh);
      const auto h = parse_series(dh, ctx);
      DiagnoseHints hints;
      if (dd == 2) hints.t4 = hints_to_params(dho, ctx);
      else if (!dho.kind.empty())
        throw Error(ErrorCode::InvalidInput, "--case hints need --d 2");
      const auto v = diagnose(h, hints);
      std::cout << verdict_text(v) << verdict_keys(v);
      if (v.witness) std::cout << "witness_file=" << write_bundle(*v.witness, dout) << "\n";
      return v.quasi_healthy == Tri::Unknown ? 2 : 0;
    }

    if (*cex) {
      const auto ctx = context_for(cfo, 2, ch.empty() ? "0" : ch);
      auto P = *hints_to_params(cho, ctx);
      if (!ch.empty()) P.hbar = parse_series(ch, ctx);
      const auto B = t4_build(P, ctx);
      std::cout << "case=" << to_string(B.kind) << "\n";
      std::cout << "hbar=" << to_string(B.M1.hbar) << "\n";
      std::cout << "Gamma:\n" << matrix_text(B.M1.A) << "certificate f=" << to_string(B.M1.cert->f) << ", B:\n"
                << matrix_text(B.M1.cert->B);
      std::cout << "tau=" << to_string(B.M2.A(0, 0)) << "\n";
      std::cout << "alpha:\n" << matrix_text(B.alpha.U);
      std::cout << checks_keys(B.checks);
      std::cout << "witness_file=" << write_bundle(B, cout_stem) << "\n";
      return B.checks.all() ? 0 : 1;
    }

    if (*val) {
      const auto M = load_module(vmod);
      const auto rep = validate(M);
      for (const auto& dline : rep.details) std::cout << "# " << dline << "\n";
      std::cout << "certified=" << (rep.certified ? "yes" : "no") << "\n";
      std::cout << "exact=" << (rep.exact ? "yes" : "no") << "\n";
      std::cout << "connected=" << (rep.connected ? "yes" : "no") << "\n";
      bool ok = rep.certified;
      if (!vmor.empty() || !vtarget.empty()) {
        if (vmor.empty() || vtarget.empty()) throw Error(ErrorCode::InvalidInput, "--morphism and --target go together");
        const auto N = load_module(vtarget);
        validate(N);
        const auto U = load_morphism(vmor);
        if (!(U.ctx() == M.ctx) || !(N.ctx == M.ctx)) throw Error(ErrorCode::ContextMismatch, "files use different rings");
        const bool morph = check_morphism(U, M, N);
        const bool epi = epi_on_punctured(U, M, N);
        const bool surj = is_surjective(U);
        std::cout << "morphism=" << (morph ? "yes" : "no") << "\n";
        std::cout << "epi_on_punctured=" << (epi ? "yes" : "no") << "\n";
        std::cout << "surjective=" << (surj ? "yes" : "no") << "\n";
        ok = ok && morph;
      }
      return ok ? 0 : 1;
    }

    if (*dua) {
      const auto text = write_module(dualize(load_module(dumod)));
      if (duout.empty())
        std::cout << text;
      else
        write_text_file(duout, text);
      return 0;
    }

    if (*orc) {
      auto fo = ofo;
      const int p = fo.p;
      // hbar is needed through the top standard degree of every a^(p).
      const int needed = std::min(255, p * (ocol + 1) - 2);
      if (fo.precision == 0) fo.precision = std::max(needed, std::max(2 * odeg, 2 * p));
      const RingContext ctx(field_of(fo), 2, fo.precision);
      const auto h = parse_series(oh, ctx);
      const auto r = oracle_lemma2_small(h, ocol, odeg, obudget);
      std::cout << "result=" << (r.witness ? "witness" : "none") << "\n";
      std::cout << "census " << r.census.to_string() << "\n";
      if (r.witness) {
        const auto& W = *r.witness;
        for (std::size_t i = 0; i < W.summands.size(); ++i) {
          std::cout << "summand " << i + 1 << ": (";
          const auto& g = W.summands[i].generators();
          for (std::size_t k = 0; k < g.size(); ++k) std::cout << (k ? ", " : "") << monomial_to_string(g[k], 2);
          std::cout << ")\n";
        }
        for (std::size_t i = 0; i < W.phi.size(); ++i) {
          std::cout << "phi row " << i + 1 << ":";
          for (const auto& x : W.phi[i]) std::cout << " " << to_string(x);
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*p11) {
      auto fo = pfo;
      if (fo.precision == 0) fo.precision = 3 * fo.p;
      const RingContext ctx(field_of(fo), 1, fo.precision);
      const auto g = parse_series(pg, ctx);
      const int e = pe > 0 ? pe : fo.p - 1;
      try {
        const auto sols = p11_solve(g, e);
        for (const auto& s : sols) {
          std::cout << "ord_a=" << s.ord_a << "\n";
          std::cout << "field=F_" << s.field->order() << "\n";
          std::cout << "a=" << to_string(s.a) << "\n";
          std::cout << "verified_through=" << s.verified_through << "\n";
        }
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NoMorphism) throw;
        std::cout << "result=no_morphism\n# " << err.what() << "\n";
      }
      return 0;
    }

    if (*prep) {
      const auto ctx = context_for(rfo, 2, rh);
      const auto f = parse_series(rh, ctx);
      const auto lambda = find_normalizing_lambda(f);
      const auto g = shear(f, lambda);
      const auto W = weierstrass_preparation(g);
      std::cout << "lambda=" << ctx.k().to_string(lambda) << "\n";
      std::cout << "sheared=" << to_string(g) << "\n";
      std::cout << "e=" << W.e << "\n";
      std::cout << "unit=" << to_string(W.unit) << "\n";
      for (int i = 0; i < W.e; ++i) std::cout << "a" << i << "=" << to_string(W.coefficients[i]) << "\n";
      std::cout << "precision=" << f.prec() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // insufficient precision is not an input error
    if (e.code() == ErrorCode::PrecisionTooLow || e.code() == ErrorCode::OrderUnknown) return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
