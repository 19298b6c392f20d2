#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lca/rational.hpp"

namespace lca {

// Variable sets. `names` is the ASCII spelling used by the parser and by
// substitution bindings, `display` is the typeset spelling.
struct DX {
  static constexpr std::array<std::string_view, 2> names{"d", "x"};
  static constexpr std::array<std::string_view, 2> display{"∂", "x"};
};
struct LDX {
  static constexpr std::array<std::string_view, 3> names{"l", "d", "x"};
  static constexpr std::array<std::string_view, 3> display{"λ", "∂", "x"};
};
struct LMDX {
  static constexpr std::array<std::string_view, 4> names{"l", "m", "d", "x"};
  static constexpr std::array<std::string_view, 4> display{"λ", "μ", "∂", "x"};
};
struct LMD {
  static constexpr std::array<std::string_view, 3> names{"l", "m", "d"};
  static constexpr std::array<std::string_view, 3> display{"λ", "μ", "∂"};
};
// Index variable j and nilpotent u of R_m; used for banded-matrix entries.
struct JU {
  static constexpr std::array<std::string_view, 2> names{"j", "u"};
  static constexpr std::array<std::string_view, 2> display{"j", "u"};
};
// t and D; only used to parse operator expressions before they are put
// into t^k f(D) normal form.
struct TD {
  static constexpr std::array<std::string_view, 2> names{"t", "D"};
  static constexpr std::array<std::string_view, 2> display{"t", "D"};
};

/// Sparse multivariate polynomial over Q in the variables of `Vars`.
/// Zero coefficients are never stored, so equality is structural.
template <class Vars>
class Poly {
 public:
  static constexpr std::size_t arity = Vars::names.size();
  using Exponents = std::array<int, arity>;
  using Terms = std::map<Exponents, Rat>;

  Poly() = default;
  Poly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponents{}, c);
  }
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(std::size_t index) {
    if (index >= arity) throw std::out_of_range("variable index out of range");
    Exponents e{};
    e[index] = 1;
    return monomial(e, Rat(1));
  }

  static Poly variable(std::string_view name) { return variable(index_of(name)); }

  static Poly monomial(const Exponents& e, const Rat& c) {
    Poly p;
    p.add_term(e, c);
    return p;
  }

  static std::size_t index_of(std::string_view name) {
    for (std::size_t i = 0; i < arity; ++i) {
      if (Vars::names[i] == name || Vars::display[i] == name) return i;
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat constant_term() const { return coeff(Exponents{}); }

  /// Highest exponent of one variable; -1 for the zero polynomial.
  int degree(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  /// Lowest exponent of one variable; 0 for the zero polynomial.
  int low_degree(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  bool uses(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
  }

  /// Coefficient of var^k, as a polynomial in the same ring (var eliminated).
  Poly coefficient_of(std::size_t var, int k) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] != k) continue;
      Exponents f = e;
      f[var] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  /// Splits by powers of `var`: k -> coefficient polynomial.
  std::map<int, Poly> split_by(std::size_t var) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[var] = 0;
      out[e[var]].add_term(f, c);
    }
    return out;
  }

  /// Exact division by var^k; throws if some term has a smaller power.
  Poly divide_by_power(std::size_t var, int k) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] < k) throw std::domain_error("polynomial not divisible by variable power");
      Exponents f = e;
      f[var] -= k;
      r.add_term(f, c);
    }
    return r;
  }

  /// Drops every term whose exponent of `var` exceeds `max_exp` (quotient by var^{max_exp+1}).
  Poly truncate(std::size_t var, int max_exp) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] <= max_exp) r.terms_.emplace(e, c);
    }
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < arity; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const {
    Poly r(1);
    Poly b = *this;
    while (n) {
      if (n & 1u) r *= b;
      n >>= 1u;
      if (n) b *= b;
    }
    return r;
  }

  void add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Human-readable form. With `unicode` the display names are juxtaposed
  /// ("2λx"); otherwise ASCII with explicit '*' ("2*l*x") which the parser
  /// reads back.
  std::string to_string(bool unicode = false) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first, ties broken by descending exponent tuple
    std::vector<const typename Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
      int da = std::accumulate(a->first.begin(), a->first.end(), 0);
      int db = std::accumulate(b->first.begin(), b->first.end(), 0);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    for (const auto* t : order) {
      const auto& [e, c] = *t;
      Rat mag = abs(c);
      if (first) {
        if (c < 0) os << (unicode ? "−" : "-");
      } else {
        os << (c < 0 ? (unicode ? "−" : " - ") : (unicode ? "+" : " + "));
      }
      first = false;
      os << monomial_string(e, mag, unicode);
    }
    return os.str();
  }

  static std::string monomial_string(const Exponents& e, const Rat& mag, bool unicode) {
    std::ostringstream os;
    bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < arity; ++i) {
      if (e[i] == 0) continue;
      if (wrote && !unicode) os << "*";
      os << (unicode ? Vars::display[i] : Vars::names[i]);
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Simultaneous substitution of every variable of `p` by the polynomial in
/// `images` at the same index.
template <class To, class From>
Poly<To> substitute(const Poly<From>& p, const std::array<Poly<To>, Poly<From>::arity>& images) {
  constexpr std::size_t n = Poly<From>::arity;
  std::array<std::vector<Poly<To>>, n> powers;
  for (std::size_t i = 0; i < n; ++i) {
    int deg = p.degree(i);
    if (p.low_degree(i) < 0) throw std::domain_error("cannot substitute into negative powers");
    powers[i].reserve(static_cast<std::size_t>(std::max(deg, 0)) + 1);
    powers[i].emplace_back(1);
    for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Poly<To> r;
  for (const auto& [e, c] : p.terms()) {
    Poly<To> term(c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i]) term *= powers[i][static_cast<std::size_t>(e[i])];
    }
    r += term;
  }
  return r;
}

/// Name-keyed substitution. Variables that do not occur in `p` need no
/// binding; a variable that occurs but is unbound is an error.
template <class To, class From>
Poly<To> substitute(const Poly<From>& p, const std::map<std::string, Poly<To>, std::less<>>& bindings) {
  std::array<Poly<To>, Poly<From>::arity> images;
  for (std::size_t i = 0; i < Poly<From>::arity; ++i) {
    auto it = bindings.find(From::names[i]);
    if (it == bindings.end()) it = bindings.find(std::string(From::display[i]));
    if (it != bindings.end()) {
      images[i] = it->second;
    } else if (p.uses(i)) {
      throw std::invalid_argument("unbound variable '" + std::string(From::names[i]) + "'");
    }
  }
  return substitute(p, images);
}

/// Embeds a polynomial into a ring whose variable set contains all of its
/// variables (matched by name).
template <class To, class From>
Poly<To> embed(const Poly<From>& p) {
  std::array<Poly<To>, Poly<From>::arity> images;
  for (std::size_t i = 0; i < Poly<From>::arity; ++i) images[i] = Poly<To>::variable(From::names[i]);
  return substitute(p, images);
}

using BivarPoly = Poly<DX>;
using LambdaPoly = Poly<LDX>;

}  // namespace lca
