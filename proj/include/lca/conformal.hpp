#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "lca/poly.hpp"
#include "lca/univar.hpp"

namespace lca {

/// Element a(∂,x) of gc1.
struct GcElement {
  Poly<DX> poly;
  friend bool operator==(const GcElement& a, const GcElement& b) { return a.poly == b.poly; }
};

enum class SubalgebraTag { GC1, GC1X, OC1, SPC1 };

std::string_view to_string(SubalgebraTag tag);
SubalgebraTag parse_subalgebra_tag(std::string_view name);

/// [a_λ b] = a(−λ, λ+∂+x) b(λ+∂, x) − b(λ+∂, −λ+x) a(−λ, x)
Poly<LDX> lambda_bracket(const GcElement& a, const GcElement& b);

/// The same formula for elements that may carry the spectral parameters λ, μ
/// as coefficients; `lam` is the bracket parameter (λ, μ, or λ+μ).
Poly<LMDX> lambda_bracket(const Poly<LMDX>& a, const Poly<LMDX>& b, const Poly<LMDX>& lam);

bool virasoro_check(const Rat& alpha);

/// [a_λ[b_μ c]] − [b_μ[a_λ c]] = [[a_λ b]_{λ+μ} c], as a polynomial in (λ,μ,∂,x).
bool check_jacobi(const GcElement& a, const GcElement& b, const GcElement& c);

/// [b_λ a] = −[a_{−λ−∂} b]
bool check_skew_symmetry(const GcElement& a, const GcElement& b);

/// [∂a_λ b] = −λ[a_λ b] and [a_λ ∂b] = (λ+∂)[a_λ b]
bool check_sesquilinearity(const GcElement& a, const GcElement& b);

GcElement project(SubalgebraTag tag, const GcElement& a);
bool is_member(SubalgebraTag tag, const GcElement& a);

/// Throws std::invalid_argument naming the first non-member input.
bool closure_check(SubalgebraTag tag, const GcElement& a, const GcElement& b);

/// Groups by powers of x: "(2λ+∂)x", "λ+∂".
std::string render_grouped(const Poly<LDX>& p);

/// ∂ ↦ ∂+α
Poly<LDX> twist(const Poly<LDX>& p, const Rat& alpha);

/// A candidate action a_λ v of gc1 on C[∂]: given a (possibly carrying
/// parameters), v and the parameter, returns a polynomial in (λ,μ,∂).
using ModuleAction = std::function<Poly<LMDX>(const Poly<LMDX>& a, const Poly<LMDX>& v, const Poly<LMDX>& lam)>;

/// a_λ v = a(−λ, λ+∂) v(λ+∂)
ModuleAction candidate_action();
ModuleAction trivial_action();

/// [a_λ b]_{λ+μ} v = a_λ(b_μ v) − b_μ(a_λ v)
bool module_axiom_check(const ModuleAction& action, const GcElement& a, const GcElement& b, const UnivarPoly& v);

}  // namespace lca
