#pragma once

// Breuil modules killed by p: free k[[T1..Td]]-modules M with a linear map
// phi: M -> M^(sigma) whose cokernel is killed by hbar.

#include <optional>
#include <string>
#include <vector>

#include "breuil/semilinear.hpp"
#include "breuil/series_io.hpp"

namespace breuil {

/// A B = B A = f I with f dividing hbar.
struct Certificate {
  SeriesMatrix B;
  TruncatedSeries f;
};

struct BreuilModP {
  RingContext ctx;
  TruncatedSeries hbar;
  SeriesMatrix A;
  std::optional<Certificate> cert;

  int rank() const noexcept { return A.rows(); }
};

struct ModuleReport {
  bool certified = false;
  bool connected = false;
  /// The certificate identities hold as polynomial identities, not only at precision.
  bool exact = false;
  int precision = 0;
  std::vector<std::string> details;
};

namespace detail {

inline void check_shape(const BreuilModP& M) {
  if (!M.A.is_square()) throw Error(ErrorCode::DimensionMismatch, "phi matrix must be square, got " + M.A.shape());
  if (!(M.A.ctx() == M.ctx) || !(M.hbar.ctx() == M.ctx))
    throw Error(ErrorCode::ContextMismatch, "module data over different rings");
  if (M.cert) {
    if (M.cert->B.rows() != M.rank() || M.cert->B.cols() != M.rank())
      throw Error(ErrorCode::DimensionMismatch, "certificate matrix is " + M.cert->B.shape() + ", rank is " +
                                                    std::to_string(M.rank()));
  }
}

// f | hbar: exact for a monomial f (hbar read as a polynomial), otherwise at
// the precision of hbar.
inline bool divides_hbar(const TruncatedSeries& f, const TruncatedSeries& hbar, bool& exact) {
  if (f.is_monomial()) {
    const auto mono = f.terms().begin()->first;
    exact = true;
    for (const auto& [m, c] : hbar.terms())
      if (!mono.divides(m)) return false;
    return true;
  }
  exact = false;
  return divide_at_precision(hbar, f, hbar.prec()).has_value();
}

}  // namespace detail

/// Checks the certificate if present, otherwise solves for annihilation by
/// hbar. Connectedness is twisted nilpotence of A mod r.
inline ModuleReport validate(const BreuilModP& M) {
  detail::check_shape(M);
  ModuleReport rep;
  const int r = M.rank();
  rep.precision = std::min(M.A.prec(), M.hbar.prec());
  if (M.cert) {
    const auto& [B, f] = *M.cert;
    const auto fI = SeriesMatrix::scalar(M.ctx, r, f);
    const auto I = SeriesMatrix::identity(M.ctx, r);
    const bool ab = polynomial_products_equal(M.A, B, fI, I);
    const bool ba = polynomial_products_equal(B, M.A, fI, I);
    if (!ab || !ba) {
      // Accept agreement at precision for data that are genuinely truncated.
      const auto AB = M.A * B, BA = B * M.A;
      const int n = std::min({AB.prec(), BA.prec(), f.prec()});
      if (!AB.equal_through(fI, n) || !BA.equal_through(fI, n))
        throw Error(ErrorCode::InvalidCertificate, std::string(ab ? "B A" : "A B") + " differs from f I");
      rep.details.push_back("certificate identities hold through degree " + std::to_string(n));
    } else {
      rep.exact = true;
      rep.details.push_back("A B = B A = f I as polynomials");
    }
    bool exact_div = false;
    if (!detail::divides_hbar(f, M.hbar, exact_div))
      throw Error(ErrorCode::InvalidCertificate, "f = " + to_string(f) + " does not divide hbar");
    if (!exact_div) rep.exact = false;
    rep.details.push_back(std::string("f divides hbar") + (exact_div ? "" : " at precision " + std::to_string(M.hbar.prec())));
    rep.certified = true;
  } else {
    const auto res = coker_annihilated_by(M.A, M.hbar, rep.precision);
    if (!res.certified())
      throw Error(ErrorCode::AnnihilationRefuted, "hbar e_i not in the image of A at degree " + std::to_string(res.refuted_degree));
    rep.certified = true;
    rep.details.push_back("cokernel annihilated by hbar at precision " + std::to_string(rep.precision));
  }
  rep.connected = nilpotent_mod_maximal(M.A);
  rep.details.push_back(rep.connected ? "connected" : "not connected");
  return rep;
}

/// A' = B^T with certificate (A^T, f).
inline BreuilModP dualize(const BreuilModP& M) {
  if (!M.cert) throw Error(ErrorCode::MissingCertificate, "dualizing needs the matrix B of the certificate");
  BreuilModP D;
  D.ctx = M.ctx;
  D.hbar = M.hbar;
  D.A = M.cert->B.transpose();
  D.cert = Certificate{M.A.transpose(), M.cert->f};
  return D;
}

/// Rank-1 module with A = (f), certificate ((1), f).
inline BreuilModP rank_one_module(const TruncatedSeries& hbar, const TruncatedSeries& f) {
  BreuilModP M;
  M.ctx = hbar.ctx();
  M.hbar = hbar;
  M.A = SeriesMatrix::from_rows(M.ctx, {{f}});
  M.cert = Certificate{SeriesMatrix::identity(M.ctx, 1), f};
  return M;
}

struct MorphismP {
  BreuilModP source, target;
  SeriesMatrix U;  // target.rank x source.rank
};

/// A_target U = sigma(U) A_source, with stored entries read as polynomials
/// when the degrees allow it.
inline bool check_morphism(const SeriesMatrix& U, const BreuilModP& M1, const BreuilModP& M2) {
  if (U.rows() != M2.rank() || U.cols() != M1.rank())
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix " + U.shape() + " for ranks " + std::to_string(M1.rank()) +
                                                  " -> " + std::to_string(M2.rank()));
  const int p = U.ctx().p();
  const int bound = std::max(M2.A.max_degree() + U.max_degree(), p * U.max_degree() + M1.A.max_degree());
  if (const auto big = exact_context(U.ctx(), bound)) {
    const auto Ub = U.as_polynomial_in(*big);
    return (M2.A.as_polynomial_in(*big) * Ub).same_terms(twist(Ub) * M1.A.as_polynomial_in(*big));
  }
  const auto lhs = M2.A * U, rhs = twist(U) * M1.A;
  return lhs.equal_through(rhs, std::min(lhs.prec(), rhs.prec()));
}

inline bool check_morphism(const MorphismP& f) { return check_morphism(f.U, f.source, f.target); }

/// Composite V U : M1 -> M3 of U : M1 -> M2 and V : M2 -> M3.
inline MorphismP compose(const MorphismP& V, const MorphismP& U) { return {U.source, V.target, V.U * U.U}; }

/// The cokernel of U has finite length, so U is onto away from the closed point.
inline bool epi_on_punctured(const SeriesMatrix& U, const BreuilModP& M1, const BreuilModP& M2) {
  if (U.rows() != M2.rank() || U.cols() != M1.rank()) throw Error(ErrorCode::DimensionMismatch, "morphism shape");
  return coker_finite_length(U).finite();
}

}  // namespace breuil
