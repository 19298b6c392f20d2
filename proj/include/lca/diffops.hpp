#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lca/series.hpp"
#include "lca/univar.hpp"

namespace lca {

/// Σ_k t^k f_k(D) with D = t d/dt, plus a coefficient of the central element C.
class DiffOp {
 public:
  DiffOp() = default;
  static DiffOp term(int k, const UnivarPoly& f);
  static DiffOp D() { return term(0, UnivarPoly::variable()); }
  static DiffOp t_power(int k) { return term(k, UnivarPoly(1)); }

  const std::map<int, UnivarPoly>& parts() const { return parts_; }
  const Rat& central() const { return central_; }
  void set_central(const Rat& c) { central_ = c; }
  DiffOp without_central() const;
  UnivarPoly part(int k) const;
  bool is_zero() const { return parts_.empty() && central_ == 0; }

  void add(int k, const UnivarPoly& f);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Rat& s);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(DiffOp a) { return a *= Rat(-1); }
  friend DiffOp operator*(DiffOp a, const Rat& s) { return a *= s; }
  friend DiffOp operator*(const Rat& s, DiffOp a) { return a *= s; }
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.parts_ == b.parts_ && a.central_ == b.central_;
  }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  /// ASCII form accepted by parse_diffop, e.g. "t^-1*(D^2 - D) + 3*D".
  std::string to_string() const;

 private:
  std::map<int, UnivarPoly> parts_;
  Rat central_;
};

DiffOp parse_diffop(std::string_view text);

/// Associative product (central parts ignored):
/// t^k f(D) ∘ t^l g(D) = t^{k+l} f(D+l) g(D).
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// Commutator; with_central adds Ψ(a,b) C.
DiffOp diffop_bracket(const DiffOp& a, const DiffOp& b, bool with_central = false);

/// Σ_m f_m(t) (d/dt)^m with Laurent f_m.
struct DdtForm {
  std::map<int, UnivarPoly> parts;
  friend bool operator==(const DdtForm& a, const DdtForm& b) { return a.parts == b.parts; }
  std::string to_string() const;
};

DdtForm to_ddt_form(const DiffOp& a);
DiffOp from_ddt_form(const DdtForm& a);

/// Ψ(f ∂^m, g ∂^n) = m! n!/(m+n+1)! Res f^{(n+1)} g^{(m)}, extended bilinearly.
Rat cocycle_psi(const DiffOp& a, const DiffOp& b);

/// Res f^{(n+1)} g^{(m)} without the factorial weight. Not a cocycle; kept
/// for comparison only.
Rat cocycle_psi_unnormalized(const DiffOp& a, const DiffOp& b);

/// Principal degree of t^k f(D) is −k.
inline int principal_degree(int k) { return -k; }
std::map<int, DiffOp> graded_component(const DiffOp& a);

bool in_Dminus(const DiffOp& a);
bool in_D0(const DiffOp& a);

/// σ(t) = t, σ(d/dt) = −d/dt, evaluated in the d/dt basis.
DiffOp sigma_apply(const DiffOp& a);
/// t^k f(D) ↦ t^k f(−D−1−k)
DiffOp sigma_closed_form(const DiffOp& a);
bool in_Dsigma(const DiffOp& a);
/// Each piece t^j f(D) has f(w − (j+1)/2) odd.
bool in_Dsigma_parity(const DiffOp& a);

/// t^k D f(D) ↦ −t^k D f(−D−k). Throws std::invalid_argument outside D0.
DiffOp sigma_bar_apply(const DiffOp& a);
bool in_D0sigmabar(const DiffOp& a);
/// Each piece t^j D g(D + j/2) has g even.
bool in_D0sigmabar_parity(const DiffOp& a);

enum class DeltaVariant { Plain, Sigma };

/// Δ(x) = Σ Δ_n x^n/n!. `plus` are the parts λ⁺_1 ≥ λ⁺_2 ≥ ...; `minus_mirror`
/// is μ with λ⁻_j = −μ_{1−j}.
XSeries delta_eigenvalues(const std::vector<long>& plus, const std::vector<long>& minus_mirror, DeltaVariant variant,
                          int N);

/// Δ_n itself (not divided by n!).
Rat delta_n(const std::vector<long>& plus, const std::vector<long>& minus_mirror, DeltaVariant variant, int n);

/// S(n, m), Stirling numbers of the second kind.
Rat stirling2(int n, int m);

}  // namespace lca
