#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lca/rational.hpp"

namespace lca {

/// Sparse univariate Laurent polynomial over Q. Used for f(D) in t^k f(D),
/// for Laurent polynomials in t, and for polynomials in the auxiliary
/// variables w and s. Negative exponents are allowed but most operations
/// (evaluation, shifts) require an honest polynomial.
class UnivarPoly {
 public:
  using Terms = std::map<int, Rat>;

  UnivarPoly() = default;
  UnivarPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  UnivarPoly(long c) : UnivarPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static UnivarPoly monomial(int exp, const Rat& c = Rat(1));
  static UnivarPoly variable() { return monomial(1); }
  /// w(w-1)...(w-m+1)
  static UnivarPoly falling_factorial(int m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
  Rat coeff(int exp) const;
  /// -1 for zero
  int degree() const;
  int low_degree() const;

  Rat eval(const Rat& at) const;
  /// f(a*w + b)
  UnivarPoly compose_affine(const Rat& a, const Rat& b) const;
  UnivarPoly shift(const Rat& b) const { return compose_affine(Rat(1), b); }
  UnivarPoly derivative(unsigned times = 1) const;
  /// f(w) / w^k, exact; throws if some exponent < k
  UnivarPoly divide_by_power(int k) const;
  UnivarPoly multiply_by_power(int k) const;

  bool is_odd() const;
  bool is_even() const;

  void add_term(int exp, const Rat& c);

  UnivarPoly& operator+=(const UnivarPoly& o);
  UnivarPoly& operator-=(const UnivarPoly& o);
  UnivarPoly& operator*=(const Rat& s);
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator-(UnivarPoly a) { return a *= Rat(-1); }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  friend UnivarPoly operator*(UnivarPoly a, const Rat& s) { return a *= s; }
  friend UnivarPoly operator*(const Rat& s, UnivarPoly a) { return a *= s; }
  friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UnivarPoly& a, const UnivarPoly& b) { return !(a == b); }

  UnivarPoly pow(unsigned n) const;

  std::string to_string(std::string_view var = "w") const;

 private:
  Terms terms_;
};

}  // namespace lca
