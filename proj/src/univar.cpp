#include "lca/univar.hpp"

#include <sstream>
#include <stdexcept>

namespace lca {

UnivarPoly::UnivarPoly(const Rat& c) {
  if (c != 0) terms_.emplace(0, c);
}

UnivarPoly UnivarPoly::monomial(int exp, const Rat& c) {
  UnivarPoly p;
  p.add_term(exp, c);
  return p;
}

UnivarPoly UnivarPoly::falling_factorial(int m) {
  UnivarPoly r(1);
  for (int i = 0; i < m; ++i) r = r * (variable() - UnivarPoly(Rat(i)));
  return r;
}

Rat UnivarPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

int UnivarPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

int UnivarPoly::low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

Rat UnivarPoly::eval(const Rat& at) const {
  if (!is_polynomial()) throw std::domain_error("cannot evaluate a Laurent polynomial");
  Rat r(0);
  // Horner over the dense range
  for (int e = degree(); e >= 0; --e) {
    r *= at;
    r += coeff(e);
  }
  return r;
}

UnivarPoly UnivarPoly::compose_affine(const Rat& a, const Rat& b) const {
  if (!is_polynomial()) throw std::domain_error("cannot shift a Laurent polynomial");
  UnivarPoly lin = monomial(1, a) + UnivarPoly(b);
  UnivarPoly r;
  for (int e = degree(); e >= 0; --e) {
    r = r * lin;
    r += UnivarPoly(coeff(e));
  }
  return r;
}

UnivarPoly UnivarPoly::derivative(unsigned times) const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_) {
    Rat f = c;
    for (unsigned i = 0; i < times; ++i) f *= Rat(e - static_cast<int>(i));
    r.add_term(e - static_cast<int>(times), f);
  }
  return r;
}

UnivarPoly UnivarPoly::divide_by_power(int k) const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_) {
    if (e < k) throw std::domain_error("polynomial not divisible by w^" + std::to_string(k));
    r.terms_.emplace(e - k, c);
  }
  return r;
}

UnivarPoly UnivarPoly::multiply_by_power(int k) const {
  UnivarPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

bool UnivarPoly::is_odd() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0) return false;
  }
  return true;
}

bool UnivarPoly::is_even() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

void UnivarPoly::add_term(int exp, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= s;
  }
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  UnivarPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

UnivarPoly UnivarPoly::pow(unsigned n) const {
  UnivarPoly r(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string UnivarPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace lca
