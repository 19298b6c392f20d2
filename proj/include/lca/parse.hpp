#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lca/poly.hpp"
#include "lca/rational.hpp"

namespace lca {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Polynomial in (d, x); "x^2 + 1/2*d*x". Juxtaposition is not multiplication.
Poly<DX> parse_bivar(std::string_view text);

/// Commutative polynomial in t and D with negative powers of t allowed.
/// Each monomial t^k D^n is later read as the operator t^k D^n (t on the left).
Poly<TD> parse_td(std::string_view text);

/// "3,1" -> {3,1}. Empty string gives an empty list.
std::vector<long> parse_int_list(std::string_view text);
std::vector<Rat> parse_rat_list(std::string_view text);

}  // namespace lca
