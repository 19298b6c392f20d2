#include "lca/series.hpp"

namespace lca {

QSeries q_pochhammer(int a_exp, int m, int N) {
  if (m < 0) throw std::invalid_argument("q-Pochhammer length must be >= 0");
  QSeries r = QSeries::one(N);
  for (int i = 0; i < m; ++i) {
    // multiply by (1 - q^{a+i}) in place, high degrees first
    int e = a_exp + i;
    if (e == 0) {
      return QSeries(N);  // factor (1 - 1) = 0
    }
    for (int n = N; n >= e; --n) r[n] -= r[n - e];
  }
  return r;
}

QSeries q_pochhammer_inv(int a_exp, int m, int N) {
  if (m > 0 && a_exp <= 0) {
    throw std::domain_error("(1-q^" + std::to_string(a_exp) +
                            ")_q^m has zero constant term and is not invertible");
  }
  QSeries r = QSeries::one(N);
  for (int i = 0; i < m; ++i) {
    // divide by (1 - q^e): prefix sums with stride e
    int e = a_exp + i;
    for (int n = e; n <= N; ++n) r[n] += r[n - e];
  }
  return r;
}

XSeries exp_series(const Rat& a, int N) {
  XSeries r(N);
  Rat term(1);
  for (int n = 0; n <= N; ++n) {
    r[n] = term;
    term *= a;
    term /= Rat(n + 1);
  }
  return r;
}

}  // namespace lca
