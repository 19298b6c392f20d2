#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "lca/rational.hpp"

namespace lca {

struct QVar {
  static constexpr const char* name = "q";
};
struct XVar {
  static constexpr const char* name = "x";
};

/// Power series c_0 + c_1 v + ... + c_N v^N, known modulo v^{N+1}.
/// Binary operations between series of different orders re-truncate to the
/// smaller order; nothing is ever silently extended.
template <class Var>
class Series {
 public:
  explicit Series(int order = 0) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}
  Series(int order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(check_order(order)) + 1);
  }

  static Series one(int order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
  }
  static Series monomial(int order, int exp, const Rat& c = Rat(1)) {
    Series s(order);
    if (exp >= 0 && exp <= order) s.coeffs_[static_cast<std::size_t>(exp)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rat& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  Series truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return Series(order, std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  Series& operator+=(const Series& o) {
    shrink_to(o.order());
    for (int i = 0; i <= order(); ++i) (*this)[i] += o[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink_to(o.order());
    for (int i = 0; i <= order(); ++i) (*this)[i] -= o[i];
    return *this;
  }
  Series& operator*=(const Rat& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rat& s) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j] != 0) r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  /// Multiplicative inverse; requires an invertible constant term.
  Series inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    Series r(order());
    Rat inv0 = 1 / coeffs_[0];
    r[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      Rat acc(0);
      for (int i = 1; i <= n; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] != 0) acc += (*this)[i] * r[n - i];
      }
      r[n] = -acc * inv0;
    }
    return r;
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  /// Multiplication by v^k (k >= 0), dropping what falls beyond the order.
  Series shifted(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = (*this)[i];
    return r;
  }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += coeffs_[i].get_str();
    }
    return s + "]";
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series truncation order must be >= 0");
    return order;
  }
  void shrink_to(int other) {
    if (other < order()) coeffs_.resize(static_cast<std::size_t>(other) + 1);
  }

  std::vector<Rat> coeffs_;
};

using QSeries = Series<QVar>;
using XSeries = Series<XVar>;

/// (1-q^a)(1-q^{a+1})...(1-q^{a+m-1}) truncated at q^N.
QSeries q_pochhammer(int a_exp, int m, int N);

/// 1 / (1-q^a)^m_q truncated at q^N. Throws std::domain_error if a = 0 and m > 0.
QSeries q_pochhammer_inv(int a_exp, int m, int N);

/// e^{a x} = sum a^n/n! x^n, n <= N.
XSeries exp_series(const Rat& a, int N);

}  // namespace lca
