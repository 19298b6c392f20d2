#include "lca/diffops.hpp"

#include <stdexcept>

#include "lca/parse.hpp"
#include "lca/poly.hpp"

namespace lca {

DiffOp DiffOp::term(int k, const UnivarPoly& f) {
  DiffOp a;
  a.add(k, f);
  return a;
}

DiffOp DiffOp::without_central() const {
  DiffOp a = *this;
  a.central_ = 0;
  return a;
}

UnivarPoly DiffOp::part(int k) const {
  auto it = parts_.find(k);
  return it == parts_.end() ? UnivarPoly() : it->second;
}

void DiffOp::add(int k, const UnivarPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(k, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, f] : o.parts_) add(k, f);
  central_ += o.central_;
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, f] : o.parts_) add(k, -f);
  central_ -= o.central_;
  return *this;
}

DiffOp& DiffOp::operator*=(const Rat& s) {
  if (s == 0) {
    parts_.clear();
  } else {
    for (auto& [k, f] : parts_) f *= s;
  }
  central_ *= s;
  return *this;
}

std::string DiffOp::to_string() const {
  std::vector<std::string> pieces;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    const auto& [k, f] = *it;
    std::string tpart = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string fs = f.to_string("D");
    if (k == 0) {
      pieces.push_back(fs);
    } else if (f == UnivarPoly(1)) {
      pieces.push_back(tpart);
    } else if (f == UnivarPoly(-1)) {
      pieces.push_back("-" + tpart);
    } else if (f.terms().size() == 1 && f.degree() == 0) {
      pieces.push_back(fs + "*" + tpart);
    } else {
      pieces.push_back(tpart + "*(" + fs + ")");
    }
  }
  if (central_ != 0) pieces.push_back(central_.get_str() + "*C");
  if (pieces.empty()) return "0";
  std::string out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i][0] == '-') {
      out += " - " + pieces[i].substr(1);
    } else {
      out += " + " + pieces[i];
    }
  }
  return out;
}

DiffOp parse_diffop(std::string_view text) {
  Poly<TD> p = parse_td(text);
  DiffOp a;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] < 0) throw ParseError("negative power of D", 0);
    a.add(e[0], UnivarPoly::monomial(e[1], c));
  }
  return a;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  DiffOp r;
  for (const auto& [k, f] : a.parts()) {
    for (const auto& [l, g] : b.parts()) r.add(k + l, f.shift(Rat(l)) * g);
  }
  return r;
}

DiffOp diffop_bracket(const DiffOp& a, const DiffOp& b, bool with_central) {
  DiffOp r = compose(a, b) - compose(b, a);
  if (with_central) r.set_central(cocycle_psi(a, b));
  return r;
}

Rat stirling2(int n, int m) {
  if (n < 0 || m < 0) return Rat(0);
  std::vector<std::vector<Rat>> s(static_cast<std::size_t>(n) + 1, std::vector<Rat>(static_cast<std::size_t>(n) + 2));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return m > n ? Rat(0) : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

std::string DdtForm::to_string() const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [m, f] : parts) {
    if (!out.empty()) out += " + ";
    out += "(" + f.to_string("t") + ")*(d/dt)^" + std::to_string(m);
  }
  return out;
}

DdtForm to_ddt_form(const DiffOp& a) {
  // t^k D^n = Σ_m S(n,m) t^{k+m} (d/dt)^m
  DdtForm r;
  for (const auto& [k, f] : a.parts()) {
    for (const auto& [n, c] : f.terms()) {
      for (int m = 0; m <= n; ++m) {
        Rat s = stirling2(n, m);
        if (s == 0) continue;
        r.parts[m] += UnivarPoly::monomial(k + m, c * s);
      }
    }
  }
  for (auto it = r.parts.begin(); it != r.parts.end();) {
    it = it->second.is_zero() ? r.parts.erase(it) : std::next(it);
  }
  return r;
}

DiffOp from_ddt_form(const DdtForm& a) {
  // t^p (d/dt)^m = t^{p-m} D(D-1)...(D-m+1)
  DiffOp r;
  for (const auto& [m, f] : a.parts) {
    UnivarPoly ff = UnivarPoly::falling_factorial(m);
    for (const auto& [p, c] : f.terms()) r.add(p - m, ff * c);
  }
  return r;
}

namespace {

Rat residue(const UnivarPoly& f) { return f.coeff(-1); }

template <bool Normalized>
Rat psi_impl(const DiffOp& a, const DiffOp& b) {
  DdtForm A = to_ddt_form(a), B = to_ddt_form(b);
  Rat total(0);
  for (const auto& [m, f] : A.parts) {
    for (const auto& [n, g] : B.parts) {
      Rat r = residue(f.derivative(static_cast<unsigned>(n + 1)) * g.derivative(static_cast<unsigned>(m)));
      if (r == 0) continue;
      if (Normalized) {
        r *= factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n)) /
             factorial(static_cast<unsigned>(m + n + 1));
      }
      total += r;
    }
  }
  return total;
}

}  // namespace

Rat cocycle_psi(const DiffOp& a, const DiffOp& b) { return psi_impl<true>(a, b); }

Rat cocycle_psi_unnormalized(const DiffOp& a, const DiffOp& b) { return psi_impl<false>(a, b); }

std::map<int, DiffOp> graded_component(const DiffOp& a) {
  std::map<int, DiffOp> out;
  for (const auto& [k, f] : a.parts()) out[principal_degree(k)].add(k, f);
  return out;
}

bool in_Dminus(const DiffOp& a) {
  for (const auto& [k, f] : a.parts()) {
    for (int i = 0; i < -k; ++i) {
      if (f.eval(Rat(i)) != 0) return false;
    }
  }
  return true;
}

bool in_D0(const DiffOp& a) {
  for (const auto& [k, f] : a.parts()) {
    if (f.coeff(0) != 0) return false;
  }
  return true;
}

DiffOp sigma_apply(const DiffOp& a) {
  // σ(f(t) ∂^m) = (−∂)^m ∘ f(t) = (−1)^m Σ_i C(m,i) f^{(i)} ∂^{m−i}
  DdtForm in = to_ddt_form(a);
  DdtForm out;
  for (const auto& [m, f] : in.parts) {
    Rat sign = m % 2 == 0 ? Rat(1) : Rat(-1);
    for (int i = 0; i <= m; ++i) {
      UnivarPoly term = f.derivative(static_cast<unsigned>(i)) * (sign * binomial(m, i));
      out.parts[m - i] += term;
    }
  }
  for (auto it = out.parts.begin(); it != out.parts.end();) {
    it = it->second.is_zero() ? out.parts.erase(it) : std::next(it);
  }
  return from_ddt_form(out);
}

DiffOp sigma_closed_form(const DiffOp& a) {
  DiffOp r;
  for (const auto& [k, f] : a.parts()) r.add(k, f.compose_affine(Rat(-1), Rat(-1 - k)));
  return r;
}

bool in_Dsigma(const DiffOp& a) { return sigma_apply(a) == -a.without_central(); }

bool in_Dsigma_parity(const DiffOp& a) {
  for (const auto& [j, f] : a.parts()) {
    if (!f.shift(make_rat(-(j + 1), 2)).is_odd()) return false;
  }
  return true;
}

DiffOp sigma_bar_apply(const DiffOp& a) {
  if (!in_D0(a)) throw std::invalid_argument("σ̄ is only defined on D0 (every f_k divisible by D)");
  DiffOp r;
  for (const auto& [k, f] : a.parts()) {
    UnivarPoly g = f.divide_by_power(1);
    r.add(k, -(UnivarPoly::variable() * g.compose_affine(Rat(-1), Rat(-k))));
  }
  return r;
}

bool in_D0sigmabar(const DiffOp& a) {
  if (!in_D0(a)) return false;
  return sigma_bar_apply(a) == -a.without_central();
}

bool in_D0sigmabar_parity(const DiffOp& a) {
  if (!in_D0(a)) return false;
  for (const auto& [j, f] : a.parts()) {
    if (!f.divide_by_power(1).shift(make_rat(-j, 2)).is_even()) return false;
  }
  return true;
}

Rat delta_n(const std::vector<long>& plus, const std::vector<long>& minus_mirror, DeltaVariant variant, int n) {
  Rat total(0);
  if (variant == DeltaVariant::Sigma) {
    if (!minus_mirror.empty()) throw std::invalid_argument("σ eigenvalues are defined for λ⁻ = 0 only");
    if (n % 2 == 0) return total;
    for (std::size_t j = 1; j <= plus.size(); ++j) {
      total += pow(Rat(-static_cast<long>(j)) + Rat(1, 2), static_cast<unsigned>(n)) * Rat(plus[j - 1]);
    }
    return total;
  }
  for (std::size_t j = 1; j <= plus.size(); ++j) {
    total += pow(Rat(-static_cast<long>(j)), static_cast<unsigned>(n)) * Rat(plus[j - 1]);
  }
  // λ⁻_{1−i} = −μ_i, so the j = 1−i term is (i−1)^n (−μ_i)
  for (std::size_t i = 1; i <= minus_mirror.size(); ++i) {
    total -= pow(Rat(static_cast<long>(i) - 1), static_cast<unsigned>(n)) * Rat(minus_mirror[i - 1]);
  }
  return total;
}

XSeries delta_eigenvalues(const std::vector<long>& plus, const std::vector<long>& minus_mirror, DeltaVariant variant,
                          int N) {
  XSeries r(N);
  for (int n = 0; n <= N; ++n) r[n] = delta_n(plus, minus_mirror, variant, n) / factorial(static_cast<unsigned>(n));
  return r;
}

}  // namespace lca
