#include "lca/glinf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace lca {
namespace {

using PJ = Poly<JU>;

const PJ& Jv() {
  static const PJ v = PJ::variable("j");
  return v;
}
const PJ& Uv() {
  static const PJ v = PJ::variable("u");
  return v;
}

PJ sub_j(const PJ& p, const PJ& j) { return substitute(p, std::array<PJ, 2>{j, Uv()}); }
PJ sub_ju(const PJ& p, const PJ& j, const PJ& u) { return substitute(p, std::array<PJ, 2>{j, u}); }
PJ at(const PJ& p, int j) { return sub_j(p, PJ(Rat(j))); }
PJ flip_u(const PJ& p) { return sub_ju(p, Jv(), -Uv()); }

// f(image), f univariate
PJ compose_univar(const UnivarPoly& f, const PJ& image) {
  if (!f.is_polynomial()) throw std::domain_error("entry polynomial has negative powers");
  PJ r;
  for (int e = f.degree(); e >= 0; --e) {
    r = r * image;
    r += PJ(f.coeff(e));
  }
  return r;
}

void check_modulus(const BandedMat& a, const BandedMat& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch: m=" + std::to_string(a.modulus()) +
                                " vs m=" + std::to_string(b.modulus()));
  }
}

bool is_nonpositive(int i) { return i <= 0; }

}  // namespace

BandedMat::BandedMat(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("modulus m must be >= 0");
}

BandedMat BandedMat::unit(int m, int i, int j, const RmPoly& c) {
  BandedMat a(m);
  a.add_entry(i, j, c);
  return a;
}

void BandedMat::add_diagonal(int k, const Poly<JU>& e) {
  PJ r = reduce(e);
  if (r.is_zero()) return;
  auto [it, inserted] = diags_.try_emplace(k, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) diags_.erase(it);
  }
}

void BandedMat::add_entry(int i, int j, const RmPoly& c) {
  if (c.uses(0)) throw std::invalid_argument("matrix entry must not depend on j");
  PJ r = reduce(c);
  if (r.is_zero()) return;
  auto [it, inserted] = corr_.try_emplace(Index{i, j}, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) corr_.erase(it);
  }
}

void BandedMat::set_central(const RmPoly& c) { central_ = reduce(c); }

RmPoly BandedMat::entry(int i, int j) const {
  RmPoly r;
  auto d = diags_.find(j - i);
  if (d != diags_.end()) r += at(d->second, j);
  auto c = corr_.find(Index{i, j});
  if (c != corr_.end()) r += c->second;
  return r;
}

BandedMat& BandedMat::operator+=(const BandedMat& o) {
  check_modulus(*this, o);
  for (const auto& [k, e] : o.diags_) add_diagonal(k, e);
  for (const auto& [ij, c] : o.corr_) add_entry(ij.first, ij.second, c);
  central_ += o.central_;
  return *this;
}

BandedMat& BandedMat::operator-=(const BandedMat& o) {
  check_modulus(*this, o);
  for (const auto& [k, e] : o.diags_) add_diagonal(k, -e);
  for (const auto& [ij, c] : o.corr_) add_entry(ij.first, ij.second, -c);
  central_ -= o.central_;
  return *this;
}

BandedMat& BandedMat::operator*=(const Rat& s) {
  if (s == 0) {
    diags_.clear();
    corr_.clear();
    central_ = RmPoly();
    return *this;
  }
  for (auto& [k, e] : diags_) e *= s;
  for (auto& [ij, c] : corr_) c *= s;
  central_ *= s;
  return *this;
}

BandedMat operator*(const BandedMat& a, const BandedMat& b) {
  check_modulus(a, b);
  BandedMat r(a.m_);
  // diagonal k times diagonal k': offset k+k', entry e_k(j−k') e'_{k'}(j)
  for (const auto& [k, e] : a.diags_) {
    for (const auto& [k2, e2] : b.diags_) r.add_diagonal(k + k2, sub_j(e, Jv() - PJ(k2)) * e2);
  }
  // diagonal times correction: A(p−k, p) B(p, l)
  for (const auto& [k, e] : a.diags_) {
    for (const auto& [pl, c] : b.corr_) r.add_entry(pl.first - k, pl.second, at(e, pl.first) * c);
  }
  // correction times diagonal: A(i, p) B(p, p+k')
  for (const auto& [ip, c] : a.corr_) {
    for (const auto& [k2, e2] : b.diags_) r.add_entry(ip.first, ip.second + k2, c * at(e2, ip.second + k2));
  }
  for (const auto& [ip, c] : a.corr_) {
    for (const auto& [pl, c2] : b.corr_) {
      if (ip.second == pl.first) r.add_entry(ip.first, pl.second, c * c2);
    }
  }
  return r;
}

BandedMat BandedMat::without_central() const {
  BandedMat r = *this;
  r.central_ = RmPoly();
  return r;
}

std::vector<std::tuple<int, int, RmPoly>> BandedMat::window(int lo, int hi) const {
  std::vector<std::tuple<int, int, RmPoly>> out;
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      RmPoly e = entry(i, j);
      if (!e.is_zero()) out.emplace_back(i, j, e);
    }
  }
  return out;
}

BandedMat mat_bracket(const BandedMat& a, const BandedMat& b, bool with_central) {
  BandedMat r = a * b - b * a;
  if (with_central) r.set_central(cocycle_alpha(a, b));
  return r;
}

RmPoly cocycle_alpha(const BandedMat& a, const BandedMat& b) {
  check_modulus(a, b);
  // (J_i − J_j) vanishes unless i and j lie on opposite sides of 0|1
  std::set<BandedMat::Index> pairs;
  for (const auto& [k, e] : a.diagonals()) {
    if (k > 0) {
      for (int j = 1; j <= k; ++j) pairs.emplace(j - k, j);
    } else if (k < 0) {
      for (int j = k + 1; j <= 0; ++j) pairs.emplace(j - k, j);
    }
  }
  for (const auto& [ij, c] : a.corrections()) {
    if (is_nonpositive(ij.first) != is_nonpositive(ij.second)) pairs.insert(ij);
  }
  RmPoly total;
  for (const auto& [i, j] : pairs) {
    RmPoly term = a.entry(i, j) * b.entry(j, i);
    if (is_nonpositive(i)) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total.truncate(1, a.modulus());
}

BandedMat phi_s_m(const Rat& s, int m, const DiffOp& a) {
  if (a.central() != 0) throw std::invalid_argument("φ_s is applied to elements without central part");
  BandedMat r(m);
  PJ image = -Jv() + PJ(s) + Uv();
  for (const auto& [k, f] : a.parts()) r.add_diagonal(k, compose_univar(f, image));
  return r;
}

std::vector<UnivarPoly> phi_hat_series_in_s(int N) {
  // (e^{sx}−1)/x = Σ s^{n+1} x^n/(n+1)!, (e^x−1)/x = Σ x^n/(n+1)!
  std::vector<UnivarPoly> g;
  for (int n = 0; n <= N; ++n) {
    UnivarPoly gn = UnivarPoly::monomial(n + 1, 1 / factorial(static_cast<unsigned>(n + 1)));
    for (int i = 1; i <= n; ++i) gn -= g[static_cast<std::size_t>(n - i)] * (1 / factorial(static_cast<unsigned>(i + 1)));
    g.push_back(gn);
  }
  return g;
}

RmPoly phi_hat_correction(const Rat& s, int m, const UnivarPoly& f, int N) {
  if (f.is_zero()) return RmPoly();
  if (N < f.degree()) throw std::invalid_argument("expansion order N is below deg f");
  auto g = phi_hat_series_in_s(f.degree());
  PJ s_plus_u = PJ(s) + Uv();
  RmPoly total;
  for (const auto& [n, c] : f.terms()) {
    if (n < 0) throw std::invalid_argument("f must be a polynomial");
    total += compose_univar(g[static_cast<std::size_t>(n)], s_plus_u) * (c * factorial(static_cast<unsigned>(n)));
  }
  return total.truncate(1, m);
}

Rat phi_hat_correction_series(const Rat& s, const UnivarPoly& f, int N) {
  if (f.is_zero()) return Rat(0);
  if (N < f.degree()) throw std::invalid_argument("expansion order N is below deg f");
  // divide numerator and denominator by x to remove the removable singularity
  XSeries num(N), den(N);
  XSeries es = exp_series(s, N + 1), e1 = exp_series(Rat(1), N + 1);
  for (int n = 0; n <= N; ++n) {
    num[n] = es[n + 1];
    den[n] = e1[n + 1];
  }
  XSeries G = num / den;
  Rat total(0);
  for (const auto& [n, c] : f.terms()) total += c * factorial(static_cast<unsigned>(n)) * G[n];
  return total;
}

BandedMat phi_hat(const Rat& s, int m, const DiffOp& a) {
  BandedMat r = phi_s_m(s, m, a.without_central());
  UnivarPoly f0 = a.part(0);
  RmPoly central = RmPoly(a.central()) - phi_hat_correction(s, m, f0, std::max(f0.degree(), 0));
  r.set_central(central);
  return r;
}

bool homomorphism_check(const Rat& s, int m, const DiffOp& a, const DiffOp& b) {
  DiffOp ab = diffop_bracket(a.without_central(), b.without_central());
  BandedMat pa = phi_s_m(s, m, a.without_central()), pb = phi_s_m(s, m, b.without_central());
  if (phi_s_m(s, m, ab) != mat_bracket(pa, pb)) return false;
  UnivarPoly f0 = ab.part(0);
  RmPoly lhs = RmPoly(cocycle_psi(a, b)) - phi_hat_correction(s, m, f0, std::max(f0.degree(), 0));
  return lhs == cocycle_alpha(pa, pb);
}

namespace {

// a_ij(u) = sign(i,j) a_{c−j,c−i}(±u), checked per diagonal as a polynomial
// identity in j and at every correction position and its mirror.
bool satisfies_involution(const BandedMat& a, int c, const std::function<int(int, int)>& sign, bool twist_u) {
  auto tw = [&](const PJ& p) { return twist_u ? flip_u(p) : p; };
  for (const auto& [k, e] : a.diagonals()) {
    // (j−k, j) maps to (c−j, c−j+k): same diagonal, column c−j+k
    PJ mirrored = tw(sub_j(e, PJ(Rat(c + k)) - Jv()));
    // i + j = 2j − k has the parity of k
    if (e != mirrored * Rat(sign(-k, 0))) return false;
  }
  std::set<BandedMat::Index> positions;
  for (const auto& [ij, v] : a.corrections()) {
    positions.insert(ij);
    positions.emplace(c - ij.second, c - ij.first);
  }
  for (const auto& [i, j] : positions) {
    if (a.entry(i, j) != tw(a.entry(c - j, c - i)) * Rat(sign(i, j))) return false;
  }
  return true;
}

int minus_one(int, int) { return -1; }
int c_sign(int i, int j) { return (i + j + 1) % 2 == 0 ? 1 : -1; }

}  // namespace

bool in_binf(const BandedMat& a) { return satisfies_involution(a, 0, minus_one, true); }
bool in_cinf(const BandedMat& a) { return satisfies_involution(a, 1, c_sign, true); }
bool in_dinf(const BandedMat& a) { return satisfies_involution(a, 1, minus_one, true); }
bool in_dinf_untwisted(const BandedMat& a) { return satisfies_involution(a, 1, minus_one, false); }

bool preserves_weighted_form(const BandedMat& a, const Rat& s) {
  Rat two_s = s * 2;
  if (!is_integer(two_s)) throw std::invalid_argument("2s must be an integer");
  int c = static_cast<int>(to_long(two_s));
  int m = a.modulus();
  auto omega = [&](const PJ& i) { return PJ(s) - i + Uv(); };
  for (const auto& [k, e] : a.diagonals()) {
    PJ lhs = e * omega(Jv() - PJ(k));
    PJ rhs = -flip_u(sub_j(e, PJ(Rat(c + k)) - Jv())) * omega(Jv());
    if (lhs.truncate(1, m) != rhs.truncate(1, m)) return false;
  }
  std::set<BandedMat::Index> positions;
  for (const auto& [ij, v] : a.corrections()) {
    positions.insert(ij);
    positions.emplace(c - ij.second, c - ij.first);
  }
  for (const auto& [i, j] : positions) {
    PJ lhs = a.entry(i, j) * omega(PJ(Rat(i)));
    PJ rhs = -flip_u(a.entry(c - j, c - i)) * omega(PJ(Rat(j)));
    if (lhs.truncate(1, m) != rhs.truncate(1, m)) return false;
  }
  return true;
}

FinMat p_s_project(int s, const FinMat& a) {
  if (!a.is_finite()) throw std::invalid_argument("p_s of a banded matrix: use p_s_project_window");
  auto shift = [s](int i) { return i > s ? i - 1 : i; };
  FinMat r(a.modulus());
  for (const auto& [ij, c] : a.corrections()) {
    if (ij.first == s || ij.second == s) continue;
    r.add_entry(shift(ij.first), shift(ij.second), c);
  }
  r.set_central(a.central());
  return r;
}

FinMat p_s_project_window(int s, const BandedMat& a, int lo, int hi) {
  auto unshift = [s](int i) { return i >= s ? i + 1 : i; };
  FinMat r(a.modulus());
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) r.add_entry(i, j, a.entry(unshift(i), unshift(j)));
  }
  r.set_central(a.central());
  return r;
}

std::string to_string(const RmPoly& p) { return p.to_string(false); }

}  // namespace lca
