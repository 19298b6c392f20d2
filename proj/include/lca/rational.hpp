#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lca {

/// Exact rational coefficient. GMP keeps it in canonical reduced form as long
/// as every value that enters through `make_rat` / `parse_rat` is canonicalized.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "3", "-2", "1/2", "-7/3". Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Integer value of `r`; throws std::domain_error if `r` is not an integer
/// or does not fit in a long.
long to_long(const Rat& r);

Rat factorial(unsigned n);
Rat binomial(long n, long k);
Rat pow(const Rat& base, unsigned exp);

}  // namespace lca
