#include <stdexcept>

#include "doctest.h"
#include "lca/diffops.hpp"

using namespace lca;

namespace {
DiffOp op(const char* text) { return parse_diffop(text); }
}  // namespace

TEST_CASE("parse and print") {
  DiffOp a = op("t^-1*(D^2-D) + 3*D");
  CHECK(a.part(-1) == UnivarPoly::monomial(2) - UnivarPoly::monomial(1));
  CHECK(a.part(0) == UnivarPoly::monomial(1, Rat(3)));
  CHECK(parse_diffop(a.to_string()) == a);
}

TEST_CASE("bracket examples") {
  CHECK(diffop_bracket(DiffOp::D(), op("t")) == op("t"));
  DiffOp c = diffop_bracket(op("t"), op("t^-1"), true);
  CHECK(c.parts().empty());
  CHECK(c.central() == 1);
  CHECK(diffop_bracket(DiffOp::D(), DiffOp::D()).is_zero());
}

TEST_CASE("composition") {
  // t^k f(D) t^l g(D) = t^{k+l} f(D+l) g(D)
  CHECK(compose(DiffOp::D(), op("t")) == op("t*D + t"));
  CHECK(compose(op("t^-1"), op("t")) == op("1"));
}

TEST_CASE("d/dt form") {
  DdtForm a = to_ddt_form(DiffOp::D());
  CHECK(a.parts.size() == 1);
  CHECK(a.parts.at(1) == UnivarPoly::monomial(1));
  DdtForm b = to_ddt_form(op("t^-1*(D^2-D)"));
  CHECK(b.parts.size() == 1);
  CHECK(b.parts.at(2) == UnivarPoly::monomial(1));
  DdtForm c = to_ddt_form(op("t^2"));
  CHECK(c.parts.at(0) == UnivarPoly::monomial(2));
  CHECK(stirling2(4, 2) == 7);
}

TEST_CASE("cocycle examples") {
  CHECK(cocycle_psi(op("t"), op("t^-1")) == 1);
  CHECK(cocycle_psi(DiffOp::D(), DiffOp::D()) == 0);
  CHECK(cocycle_psi(op("t"), op("t")) == 0);
  // the normalized and raw residues differ once both orders are positive
  CHECK(cocycle_psi(op("t^2*D"), op("t^-2*D")) == -1);
  CHECK(cocycle_psi_unnormalized(op("t^2*D"), op("t^-2*D")) == -6);
}

TEST_CASE("graded components") {
  auto g = graded_component(op("t + t^-1"));
  CHECK(g.size() == 2);
  CHECK(g.at(-1) == op("t"));
  CHECK(g.at(1) == op("t^-1"));
  CHECK(graded_component(op("D^2")).at(0) == op("D^2"));
  CHECK(graded_component(op("t^-2*D")).at(2) == op("t^-2*D"));
}

TEST_CASE("regular on C") {
  CHECK(in_Dminus(op("t^-1*D")));
  CHECK_FALSE(in_Dminus(op("t^-1")));
  CHECK(in_Dminus(op("t^3*D^5")));
}

TEST_CASE("killing constants") {
  CHECK(in_D0(op("t^2*D")));
  CHECK_FALSE(in_D0(op("t^2")));
  CHECK(in_D0(op("D^3 - D")));
}

TEST_CASE("sigma") {
  CHECK(in_Dsigma(op("t*(D+1)")));
  CHECK_FALSE(in_Dsigma(DiffOp::D()));
  CHECK(in_Dsigma(op("D + 1/2")));
  CHECK_FALSE(in_Dsigma(op("t")));
  CHECK(sigma_apply(op("t")) == op("t"));
  DiffOp a = op("t^2*D^3 - t^-1*D + 5");
  CHECK(sigma_apply(a) == sigma_closed_form(a));
  CHECK(in_Dsigma_parity(op("t*(D+1)")));
}

TEST_CASE("sigma bar") {
  CHECK(sigma_bar_apply(op("t^2*D")) == op("-t^2*D"));
  CHECK(in_D0sigmabar(op("t^2*D")));
  CHECK_FALSE(in_D0sigmabar(op("D^2")));
  CHECK(in_D0sigmabar(op("D^3")));
  CHECK_FALSE(in_D0sigmabar(op("t")));
  CHECK_THROWS_AS(sigma_bar_apply(op("t")), std::invalid_argument);
  CHECK(in_D0sigmabar_parity(op("D^3")));
}

TEST_CASE("delta eigenvalues") {
  CHECK(delta_eigenvalues({1}, {}, DeltaVariant::Plain, 3) == exp_series(Rat(-1), 3));
  CHECK(delta_eigenvalues({}, {}, DeltaVariant::Plain, 3) == XSeries(3));
  CHECK(delta_eigenvalues({1}, {}, DeltaVariant::Sigma, 3) == XSeries(3, {0, make_rat(-1, 2), 0, make_rat(-1, 48)}));
}
