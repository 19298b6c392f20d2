#include "lca/rational.hpp"

#include <stdexcept>

namespace lca {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("rational " + r.get_str() + " is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::domain_error("integer " + r.get_str() + " out of range");
  return r.get_num().get_si();
}

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat binomial(long n, long k) {
  if (k < 0) return Rat(0);
  // generalized binomial so that negative n also works
  Rat r(1);
  for (long i = 0; i < k; ++i) {
    r *= Rat(n - i);
    r /= Rat(i + 1);
  }
  return r;
}

Rat pow(const Rat& base, unsigned exp) {
  Rat r(1);
  Rat b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

}  // namespace lca
