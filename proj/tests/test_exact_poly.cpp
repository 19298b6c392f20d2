#include <stdexcept>

#include "doctest.h"
#include "lca/parse.hpp"
#include "lca/poly.hpp"
#include "lca/series.hpp"
#include "lca/univar.hpp"

using namespace lca;

namespace {
using Bindings = std::map<std::string, Poly<LDX>, std::less<>>;
Poly<LDX> l() { return Poly<LDX>::variable("l"); }
Poly<LDX> d() { return Poly<LDX>::variable("d"); }
Poly<LDX> x() { return Poly<LDX>::variable("x"); }
}  // namespace

TEST_CASE("substitute") {
  Poly<DX> px = Poly<DX>::variable("x");
  CHECK(substitute(px, Bindings{{"x", l() + d() + x()}}) == l() + d() + x());
  CHECK(substitute(px * px, Bindings{{"x", x() - l()}}) == l() * l() - Rat(2) * l() * x() + x() * x());
  Poly<DX> dx = parse_bivar("d*x");
  CHECK(substitute(dx, Bindings{{"x", x()}, {"d", d()}}) == d() * x());
  CHECK_THROWS_WITH_AS(substitute(dx, Bindings{{"d", d()}}), "unbound variable 'x'", std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  Poly<DX> p = parse_bivar("x^2 + 1/2*d*x");
  CHECK(p.coeff({1, 1}) == make_rat(1, 2));
  CHECK(p.degree(1) == 2);
  CHECK((p - p).is_zero());
  CHECK(p.pow(2) == p * p);
  CHECK(parse_bivar(p.to_string()) == p);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_bivar("x^"), ParseError);
  CHECK_THROWS_AS(parse_bivar("x + y"), ParseError);
  try {
    parse_bivar("x + y");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("q-pochhammer inverse") {
  CHECK(q_pochhammer_inv(1, 1, 4) == QSeries(4, {1, 1, 1, 1, 1}));
  CHECK(q_pochhammer_inv(1, 2, 3) == QSeries(3, {1, 1, 2, 2}));
  CHECK(q_pochhammer_inv(3, 0, 5) == QSeries::one(5));
  CHECK_THROWS_AS(q_pochhammer_inv(0, 1, 5), std::domain_error);
  CHECK(q_pochhammer(1, 3, 6) * q_pochhammer_inv(1, 3, 6) == QSeries::one(6));
}

TEST_CASE("exp series") {
  CHECK(exp_series(Rat(0), 3) == XSeries(3, {1, 0, 0, 0}));
  CHECK(exp_series(Rat(-1), 3) == XSeries(3, {1, -1, make_rat(1, 2), make_rat(-1, 6)}));
  CHECK(exp_series(make_rat(1, 2), 2) == XSeries(2, {1, make_rat(1, 2), make_rat(1, 8)}));
}

TEST_CASE("series truncation never extends") {
  QSeries a = q_pochhammer_inv(1, 1, 5), b = q_pochhammer_inv(1, 1, 3);
  CHECK((a * b).order() == 3);
  CHECK_THROWS_AS(b.truncated(4), std::invalid_argument);
}

TEST_CASE("univariate helpers") {
  UnivarPoly w = UnivarPoly::variable();
  CHECK(UnivarPoly::falling_factorial(3) == w * (w - 1) * (w - 2));
  CHECK(w.pow(3).shift(Rat(1)) == (w + 1).pow(3));
  CHECK((w.pow(3) - w).is_odd());
  CHECK((w.pow(2) + 1).is_even());
  CHECK(w.pow(2).derivative() == Rat(2) * w);
}
