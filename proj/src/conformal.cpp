#include "lca/conformal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lca {
namespace {

using P4 = Poly<LMDX>;

const P4& L() {
  static const P4 v = P4::variable("l");
  return v;
}
const P4& M() {
  static const P4 v = P4::variable("m");
  return v;
}
const P4& Dv() {
  static const P4 v = P4::variable("d");
  return v;
}
const P4& X() {
  static const P4 v = P4::variable("x");
  return v;
}

// substitute ∂ and x, keeping λ, μ
P4 sub_dx(const P4& p, const P4& d, const P4& x) { return substitute(p, std::array<P4, 4>{L(), M(), d, x}); }

Poly<LDX> to_ldx(const P4& p) {
  using P3 = Poly<LDX>;
  if (p.uses(1)) throw std::logic_error("unexpected μ in a single-parameter result");
  return substitute(p, std::array<P3, 4>{P3::variable("l"), P3(0), P3::variable("d"), P3::variable("x")});
}

Poly<DX> x_to_minus_d_minus_x(const Poly<DX>& p) {
  using P = Poly<DX>;
  return substitute(p, std::array<P, 2>{P::variable("d"), -P::variable("d") - P::variable("x")});
}

}  // namespace

std::string_view to_string(SubalgebraTag tag) {
  switch (tag) {
    case SubalgebraTag::GC1:
      return "gc1";
    case SubalgebraTag::GC1X:
      return "gc1x";
    case SubalgebraTag::OC1:
      return "oc1";
    case SubalgebraTag::SPC1:
      return "spc1";
  }
  return "?";
}

SubalgebraTag parse_subalgebra_tag(std::string_view name) {
  for (auto t : {SubalgebraTag::GC1, SubalgebraTag::GC1X, SubalgebraTag::OC1, SubalgebraTag::SPC1}) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown subalgebra '" + std::string(name) + "'");
}

P4 lambda_bracket(const P4& a, const P4& b, const P4& lam) {
  P4 first = sub_dx(a, -lam, lam + Dv() + X()) * sub_dx(b, lam + Dv(), X());
  P4 second = sub_dx(b, lam + Dv(), -lam + X()) * sub_dx(a, -lam, X());
  return first - second;
}

Poly<LDX> lambda_bracket(const GcElement& a, const GcElement& b) {
  return to_ldx(lambda_bracket(embed<LMDX>(a.poly), embed<LMDX>(b.poly), L()));
}

bool virasoro_check(const Rat& alpha) {
  using P = Poly<DX>;
  GcElement vir{P::variable("x") + P::variable("d") * alpha};
  Poly<LDX> lhs = lambda_bracket(vir, vir);
  Poly<LDX> rhs = (Poly<LDX>::variable("l") * Rat(2) + Poly<LDX>::variable("d")) * embed<LDX>(vir.poly);
  return lhs == rhs;
}

bool check_jacobi(const GcElement& a, const GcElement& b, const GcElement& c) {
  P4 A = embed<LMDX>(a.poly), B = embed<LMDX>(b.poly), C = embed<LMDX>(c.poly);
  P4 lhs = lambda_bracket(A, lambda_bracket(B, C, M()), L()) - lambda_bracket(B, lambda_bracket(A, C, L()), M());
  P4 rhs = lambda_bracket(lambda_bracket(A, B, L()), C, L() + M());
  return lhs == rhs;
}

bool check_skew_symmetry(const GcElement& a, const GcElement& b) {
  using P3 = Poly<LDX>;
  P3 ab = lambda_bracket(a, b);
  P3 flipped = substitute(ab, std::array<P3, 3>{-P3::variable("l") - P3::variable("d"), P3::variable("d"),
                                                 P3::variable("x")});
  return lambda_bracket(b, a) == -flipped;
}

bool check_sesquilinearity(const GcElement& a, const GcElement& b) {
  using P3 = Poly<LDX>;
  Poly<DX> d = Poly<DX>::variable("d");
  P3 ab = lambda_bracket(a, b);
  P3 l = P3::variable("l");
  bool left = lambda_bracket(GcElement{d * a.poly}, b) == -l * ab;
  bool right = lambda_bracket(a, GcElement{d * b.poly}) == (l + P3::variable("d")) * ab;
  return left && right;
}

GcElement project(SubalgebraTag tag, const GcElement& a) {
  Poly<DX> x = Poly<DX>::variable("x");
  switch (tag) {
    case SubalgebraTag::GC1X:
      return {x * a.poly};
    case SubalgebraTag::OC1:
      return {a.poly - x_to_minus_d_minus_x(a.poly)};
    case SubalgebraTag::SPC1:
      return {x * (a.poly + x_to_minus_d_minus_x(a.poly))};
    case SubalgebraTag::GC1:
      break;
  }
  throw std::invalid_argument("no projection onto gc1");
}

bool is_member(SubalgebraTag tag, const GcElement& a) {
  const auto& p = a.poly;
  switch (tag) {
    case SubalgebraTag::GC1:
      return true;
    case SubalgebraTag::GC1X:
      return p.low_degree(1) >= 1 || p.is_zero();
    case SubalgebraTag::OC1:
      return p == -x_to_minus_d_minus_x(p);
    case SubalgebraTag::SPC1: {
      if (p.is_zero()) return true;
      if (p.low_degree(1) < 1) return false;
      Poly<DX> q = p.divide_by_power(1, 1);
      return q == x_to_minus_d_minus_x(q);
    }
  }
  return false;
}

bool closure_check(SubalgebraTag tag, const GcElement& a, const GcElement& b) {
  if (!is_member(tag, a)) throw std::invalid_argument("first argument is not in " + std::string(to_string(tag)));
  if (!is_member(tag, b)) throw std::invalid_argument("second argument is not in " + std::string(to_string(tag)));
  Poly<LDX> br = lambda_bracket(a, b);
  using P = Poly<DX>;
  for (const auto& [k, coeff] : br.split_by(0)) {
    P c = substitute(coeff, std::array<P, 3>{P(0), P::variable("d"), P::variable("x")});
    if (!is_member(tag, GcElement{c})) return false;
  }
  return true;
}

std::string render_grouped(const Poly<LDX>& p) {
  if (p.is_zero()) return "0";
  auto groups = p.split_by(2);
  std::string out;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const auto& [k, coeff] = *it;
    std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string piece;
    bool negative = false;
    if (coeff.size() == 1) {
      const auto& [e, c] = *coeff.terms().begin();
      negative = c < 0;
      bool bare = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
      if (bare && k != 0 && abs(c) == 1) {
        piece = xpart;
      } else {
        piece = Poly<LDX>::monomial_string(e, abs(c), true) + xpart;
      }
    } else if (k == 0) {
      piece = coeff.to_string(true);
      // leading sign of an unparenthesized sum joins the separator
      const std::string minus = "−";
      if (piece.compare(0, minus.size(), minus) == 0) {
        negative = true;
        piece.erase(0, minus.size());
      }
    } else {
      piece = "(" + coeff.to_string(true) + ")" + xpart;
    }
    if (out.empty()) {
      out = (negative ? "−" : "") + piece;
    } else {
      out += (negative ? "−" : "+") + piece;
    }
  }
  return out;
}

Poly<LDX> twist(const Poly<LDX>& p, const Rat& alpha) {
  using P3 = Poly<LDX>;
  return substitute(p, std::array<P3, 3>{P3::variable("l"), P3::variable("d") + P3(alpha), P3::variable("x")});
}

ModuleAction candidate_action() {
  return [](const P4& a, const P4& v, const P4& lam) {
    P4 shifted = lam + Dv();
    return sub_dx(a, -lam, shifted) * sub_dx(v, shifted, X());
  };
}

ModuleAction trivial_action() {
  return [](const P4&, const P4&, const P4&) { return P4(); };
}

bool module_axiom_check(const ModuleAction& action, const GcElement& a, const GcElement& b, const UnivarPoly& v) {
  P4 A = embed<LMDX>(a.poly), B = embed<LMDX>(b.poly);
  P4 V;
  for (const auto& [e, c] : v.terms()) {
    if (e < 0) throw std::invalid_argument("module element must be a polynomial in ∂");
    V += Dv().pow(static_cast<unsigned>(e)) * c;
  }
  P4 lhs = action(lambda_bracket(A, B, L()), V, L() + M());
  P4 rhs = action(A, action(B, V, M()), L()) - action(B, action(A, V, L()), M());
  return lhs == rhs;
}

}  // namespace lca
