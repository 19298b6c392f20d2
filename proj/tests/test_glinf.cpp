#include <stdexcept>

#include "doctest.h"
#include "lca/glinf.hpp"

using namespace lca;

namespace {
DiffOp op(const char* text) { return parse_diffop(text); }
RmPoly j_var() { return RmPoly::variable("j"); }
RmPoly u_var() { return RmPoly::variable("u"); }
}  // namespace

TEST_CASE("finite brackets") {
  BandedMat e01 = BandedMat::unit(0, 0, 1), e10 = BandedMat::unit(0, 1, 0);
  BandedMat expected = BandedMat::unit(0, 0, 0) - BandedMat::unit(0, 1, 1);
  expected.set_central(RmPoly(1));
  CHECK(mat_bracket(e01, e10, true) == expected);
  BandedMat e12 = BandedMat::unit(0, 1, 2), e21 = BandedMat::unit(0, 2, 1);
  CHECK(mat_bracket(e12, e21, true) == BandedMat::unit(0, 1, 1) - BandedMat::unit(0, 2, 2));
  BandedMat a = phi_s_m(Rat(0), 1, op("t*D^2 + t^-1"));
  CHECK(mat_bracket(a, a, true) == BandedMat(1));
  CHECK_THROWS_AS(mat_bracket(BandedMat(0), BandedMat(1)), std::invalid_argument);
}

TEST_CASE("alpha cocycle") {
  CHECK(cocycle_alpha(phi_s_m(Rat(0), 0, op("t")), phi_s_m(Rat(0), 0, op("t^-1"))) == RmPoly(1));
  CHECK(cocycle_alpha(BandedMat::unit(0, 1, 2), BandedMat::unit(0, 2, 3)).is_zero());
  // [J, A] = E_{-1,1} + E_{0,2}; against B only the (1,-1) entry, f(1) = 1, survives
  CHECK(cocycle_alpha(phi_s_m(Rat(0), 0, op("t^2")), phi_s_m(Rat(0), 0, op("t^-2*D"))) == RmPoly(1));
}

TEST_CASE("phi images") {
  BandedMat a = phi_s_m(Rat(0), 0, op("t"));
  CHECK(a.diagonals().size() == 1);
  CHECK(a.diagonals().at(1) == RmPoly(1));
  CHECK(phi_s_m(Rat(0), 0, DiffOp::D()).diagonals().at(0) == -j_var());
  CHECK(phi_s_m(Rat(0), 1, DiffOp::D()).diagonals().at(0) == -j_var() + u_var());
  CHECK(phi_s_m(Rat(0), 0, op("t")).entry(-1, 0) == RmPoly(1));
}

TEST_CASE("hatted correction") {
  UnivarPoly one(1), w = UnivarPoly::variable();
  CHECK(phi_hat_correction(Rat(0), 0, w.pow(3) + 2, 5).is_zero());
  CHECK(phi_hat_correction(Rat(2), 0, one, 4) == RmPoly(2));
  CHECK(phi_hat_correction(Rat(2), 0, w, 4) == RmPoly(1));
  CHECK(phi_hat_correction_series(Rat(2), w, 4) == 1);
  CHECK_THROWS_AS(phi_hat_correction(Rat(1), 0, w.pow(5), 3), std::invalid_argument);
}

TEST_CASE("homomorphism examples") {
  CHECK(homomorphism_check(Rat(0), 0, op("t"), op("t^-1")));
  CHECK(homomorphism_check(Rat(0), 0, DiffOp::D(), op("D^2")));
  CHECK(homomorphism_check(make_rat(1, 3), 1, op("t^2*D"), op("t^-2*D")));
}

TEST_CASE("membership conditions") {
  CHECK(in_dinf(phi_s_m(Rat(0), 0, op("t*(D+1)"))));
  CHECK(in_binf(BandedMat::unit(0, 1, 1) - BandedMat::unit(0, -1, -1)));
  CHECK_FALSE(in_cinf(BandedMat::unit(0, 0, 0) + BandedMat::unit(0, 1, 1)));
  CHECK(in_cinf(BandedMat::unit(0, 0, 0) - BandedMat::unit(0, 1, 1)));
}

TEST_CASE("p_s projection") {
  CHECK(p_s_project(0, BandedMat::unit(0, 0, 1)) == BandedMat(0));
  CHECK(p_s_project(0, BandedMat::unit(0, 1, 2)) == BandedMat::unit(0, 0, 1));
  CHECK(p_s_project(0, BandedMat::unit(0, -1, -2)) == BandedMat::unit(0, -1, -2));
  CHECK_THROWS_AS(p_s_project(0, phi_s_m(Rat(0), 0, op("t"))), std::invalid_argument);
  FinMat w = p_s_project_window(0, phi_s_m(Rat(0), 0, DiffOp::D()), -2, 2);
  CHECK(w.entry(0, 0) == RmPoly(-1));
  CHECK(w.entry(-1, -1) == RmPoly(1));
}
