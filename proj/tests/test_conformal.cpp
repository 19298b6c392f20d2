#include <stdexcept>

#include "doctest.h"
#include "lca/conformal.hpp"
#include "lca/parse.hpp"

using namespace lca;

namespace {
GcElement gc(const char* text) { return {parse_bivar(text)}; }
Poly<LDX> ldx(const char* name) { return Poly<LDX>::variable(name); }
}  // namespace

TEST_CASE("lambda bracket examples") {
  CHECK(render_grouped(lambda_bracket(gc("x"), gc("x"))) == "(2λ+∂)x");
  CHECK(render_grouped(lambda_bracket(gc("1"), gc("1"))) == "0");
  CHECK(render_grouped(lambda_bracket(gc("x"), gc("1"))) == "λ+∂");
  CHECK(lambda_bracket(gc("x"), gc("x")) == (Rat(2) * ldx("l") + ldx("d")) * ldx("x"));
}

TEST_CASE("virasoro elements") {
  for (const auto& a : {Rat(0), make_rat(1, 2), make_rat(7, 3), Rat(-2)}) CHECK(virasoro_check(a));
}

TEST_CASE("jacobi examples") {
  CHECK(check_jacobi(gc("x"), gc("x"), gc("x")));
  CHECK(check_jacobi(gc("1"), gc("1"), gc("1")));
  CHECK(check_jacobi(gc("x^2"), gc("d*x"), gc("x")));
}

TEST_CASE("projections") {
  CHECK(project(SubalgebraTag::OC1, gc("x")) == gc("d + 2*x"));
  CHECK(project(SubalgebraTag::SPC1, gc("1")) == gc("2*x"));
  CHECK(project(SubalgebraTag::OC1, gc("1")).poly.is_zero());
  CHECK_THROWS_AS(project(SubalgebraTag::GC1, gc("x")), std::invalid_argument);
}

TEST_CASE("membership") {
  CHECK(is_member(SubalgebraTag::OC1, gc("d + 2*x")));
  CHECK_FALSE(is_member(SubalgebraTag::GC1X, gc("d")));
  CHECK(is_member(SubalgebraTag::SPC1, gc("2*x")));
}

TEST_CASE("closure") {
  CHECK(closure_check(SubalgebraTag::OC1, gc("d + 2*x"), project(SubalgebraTag::OC1, gc("x^2"))));
  CHECK(closure_check(SubalgebraTag::GC1X, gc("x"), gc("x^2")));
  CHECK(closure_check(SubalgebraTag::SPC1, gc("2*x"), project(SubalgebraTag::SPC1, gc("x^2"))));
  CHECK_THROWS_WITH_AS(closure_check(SubalgebraTag::GC1X, gc("d"), gc("x")), "first argument is not in gc1x",
                       std::invalid_argument);
}

TEST_CASE("twist") {
  Poly<LDX> p = ldx("l") + ldx("d");
  CHECK(twist(p, Rat(1)) == p + Poly<LDX>(1));
  CHECK(twist(p, Rat(0)) == p);
  Poly<LDX> q = (Rat(2) * ldx("l") + ldx("d")) * ldx("x");
  CHECK(twist(q, make_rat(1, 2)) == (Rat(2) * ldx("l") + ldx("d") + Poly<LDX>(make_rat(1, 2))) * ldx("x"));
}

TEST_CASE("module action") {
  UnivarPoly one(1), w = UnivarPoly::variable();
  CHECK(module_axiom_check(trivial_action(), gc("x"), gc("x^2"), w));
  CHECK(module_axiom_check(candidate_action(), gc("x"), gc("x"), one));
  CHECK(module_axiom_check(candidate_action(), gc("x^2"), gc("x"), w));
}

TEST_CASE("subalgebra tag names") {
  CHECK(parse_subalgebra_tag("spc1") == SubalgebraTag::SPC1);
  CHECK(to_string(SubalgebraTag::GC1X) == "gc1x");
  CHECK_THROWS_AS(parse_subalgebra_tag("sl2"), std::invalid_argument);
}
