#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lca/diffops.hpp"
#include "lca/poly.hpp"
#include "lca/series.hpp"

namespace lca {

/// Element of R_m = Q[u]/(u^{m+1}); stored as a Poly<JU> without j.
using RmPoly = Poly<JU>;

/// Infinite matrix over R_m with finitely many nonzero diagonals. Diagonal k
/// holds the entries at (j−k, j) given by a polynomial e_k(j, u); a finitely
/// supported correction is added on top. The split is canonical (a polynomial
/// is determined by infinitely many values), so equality is structural.
class BandedMat {
 public:
  using Index = std::pair<int, int>;

  explicit BandedMat(int m = 0);
  /// c·E_{ij}
  static BandedMat unit(int m, int i, int j, const RmPoly& c = RmPoly(1));

  int modulus() const { return m_; }
  const std::map<int, Poly<JU>>& diagonals() const { return diags_; }
  const std::map<Index, RmPoly>& corrections() const { return corr_; }
  const RmPoly& central() const { return central_; }
  bool is_finite() const { return diags_.empty(); }

  void add_diagonal(int k, const Poly<JU>& e);
  void add_entry(int i, int j, const RmPoly& c);
  void set_central(const RmPoly& c);

  /// Full entry at (i, j), diagonal plus correction.
  RmPoly entry(int i, int j) const;

  BandedMat& operator+=(const BandedMat& o);
  BandedMat& operator-=(const BandedMat& o);
  BandedMat& operator*=(const Rat& s);
  friend BandedMat operator+(BandedMat a, const BandedMat& b) { return a += b; }
  friend BandedMat operator-(BandedMat a, const BandedMat& b) { return a -= b; }
  friend BandedMat operator*(BandedMat a, const Rat& s) { return a *= s; }
  friend bool operator==(const BandedMat& a, const BandedMat& b) {
    return a.m_ == b.m_ && a.diags_ == b.diags_ && a.corr_ == b.corr_ && a.central_ == b.central_;
  }
  friend bool operator!=(const BandedMat& a, const BandedMat& b) { return !(a == b); }

  /// Matrix product (central parts ignored).
  friend BandedMat operator*(const BandedMat& a, const BandedMat& b);

  BandedMat without_central() const;

  /// Nonzero entries with both indices in [lo, hi], for display.
  std::vector<std::tuple<int, int, RmPoly>> window(int lo, int hi) const;

 private:
  RmPoly reduce(const RmPoly& p) const { return p.truncate(1, m_); }

  int m_;
  std::map<int, Poly<JU>> diags_;
  std::map<Index, RmPoly> corr_;
  RmPoly central_;
};

/// A matrix with finitely many nonzero entries.
using FinMat = BandedMat;

/// [A, B] = AB − BA, plus α(A,B) C when with_central. Throws on modulus mismatch.
BandedMat mat_bracket(const BandedMat& a, const BandedMat& b, bool with_central = false);

/// α(A,B) = tr [J,A] B with J = Σ_{i≤0} E_ii.
RmPoly cocycle_alpha(const BandedMat& a, const BandedMat& b);

/// φ_s^{[m]}(t^k f(D)) = Σ_j f(−j+s+u) E_{j−k,j}.
BandedMat phi_s_m(const Rat& s, int m, const DiffOp& a);

/// Coefficients of G_s(x) = (e^{sx}−1)/(e^x−1) as polynomials in s, up to x^N.
std::vector<UnivarPoly> phi_hat_series_in_s(int N);

/// Central correction of φ̂_s on the degree-0 element f(D): Σ_n f_n n! [x^n] G_{s+u},
/// reduced mod u^{m+1}. N is the expansion order and must be ≥ deg f.
RmPoly phi_hat_correction(const Rat& s, int m, const UnivarPoly& f, int N);

/// The same correction for m = 0, computed by dividing truncated x-series at
/// the rational point s. Independent check of phi_hat_correction.
Rat phi_hat_correction_series(const Rat& s, const UnivarPoly& f, int N);

/// φ̂_s(a) = φ_s(a) − correction(a_0) C
BandedMat phi_hat(const Rat& s, int m, const DiffOp& a);

/// φ_s([a,b]) = [φ_s a, φ_s b] and Ψ(a,b) − correction([a,b]_0) = α(φ_s a, φ_s b).
bool homomorphism_check(const Rat& s, int m, const DiffOp& a, const DiffOp& b);

/// a_ij(u) = −a_{−j,−i}(−u)
bool in_binf(const BandedMat& a);
/// a_ij(u) = (−1)^{i+j+1} a_{1−j,1−i}(−u)
bool in_cinf(const BandedMat& a);
/// a_ij(u) = −a_{1−j,1−i}(−u), the condition for preserving
/// D(u^a v_i, u^b v_j) = u^a (−u)^b δ_{i,1−j}.
bool in_dinf(const BandedMat& a);
/// a_ij(u) = −a_{1−j,1−i}(u), without the u ↦ −u twist.
bool in_dinf_untwisted(const BandedMat& a);

/// a_ij(u) ω_i = −a_{2s−j,2s−i}(−u) ω_j with ω_i = s − i + u: preservation of
/// the skew form that φ_s images of D0 ∩ D_σ̄ actually preserve. 2s must be an integer.
bool preserves_weighted_form(const BandedMat& a, const Rat& s);

/// Zero row s and column s, then move indices above s down by one. Only
/// finite matrices stay finitely representable under this reindexing.
FinMat p_s_project(int s, const FinMat& a);

/// p_s of a banded matrix, restricted to the target window [lo, hi]².
FinMat p_s_project_window(int s, const BandedMat& a, int lo, int hi);

std::string to_string(const RmPoly& p);

}  // namespace lca
