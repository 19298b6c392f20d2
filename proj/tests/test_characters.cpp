#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lca/characters.hpp"

using namespace lca;

namespace {
QSeries ser(int N, std::vector<Rat> c) { return QSeries(N, std::move(c)); }
}  // namespace

TEST_CASE("partitions") {
  Partition p({3, 1});
  CHECK(p.size() == 4);
  CHECK(p.n() == 1);
  CHECK(p.conjugate() == Partition({2, 1, 1}));
  CHECK(parse_partition("3,1") == p);
  CHECK(partitions_of(4).size() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("finite gl characters") {
  CHECK(ch_finite_gl(Partition({1}), 1, 5) == QSeries::one(5));
  CHECK(ch_finite_gl(Partition({2, 1}), 2, 5) == ser(5, {1, 1}));
  CHECK(ch_finite_gl(Partition({1, 1}), 2, 5) == QSeries::one(5));
}

TEST_CASE("product formula") {
  CHECK(ch_Lplus(Partition({1}), 5) == ser(5, {1, 1, 1, 1, 1, 1}));
  CHECK(ch_Lplus(Partition({1, 1}), 4) == ser(4, {1, 1, 2, 2, 3}));
  CHECK(ch_Lplus(Partition(), 3) == QSeries::one(3));
}

TEST_CASE("tableaux oracle") {
  CHECK(ch_ssyt_oracle(Partition({1}), 3) == ser(3, {1, 1, 1, 1}));
  CHECK(ch_ssyt_oracle(Partition({2}), 3) == ser(3, {1, 1, 2, 2}));
  CHECK(ch_ssyt_oracle(Partition({1, 1}), 3) == ser(3, {1, 1, 2, 2}));
}

TEST_CASE("b and c characters") {
  BCWeight zero{BCFamily::B, {}, Rat(0)};
  CHECK(ch_binf(zero, 6) == QSeries::one(6));
  CHECK(ch_bc_coroot_oracle(zero, 6) == QSeries::one(6));
  BCWeight lambda0{BCFamily::C, {}, Rat(1)};
  QSeries c = ch_cinf(lambda0, 10);
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);
  CHECK(c == ch_bc_coroot_oracle(lambda0, 10));
  BCWeight lambda1 = parse_bcweight("B c=1 l=1");
  CHECK(ch_binf(lambda1, 10) == ch_bc_coroot_oracle(lambda1, 10));
  CHECK_THROWS_AS(ch_binf(parse_bcweight("B c=1/3 l=1"), 5), std::invalid_argument);
}

TEST_CASE("convention selection") {
  CHECK(selected_convention(BCFamily::B).found);
  CHECK(selected_convention(BCFamily::B).printed_matches);
  CHECK(selected_convention(BCFamily::C).found);
}

TEST_CASE("weight parsing") {
  BCWeight w = parse_bcweight("C c=2 l=1,1");
  CHECK(w.family == BCFamily::C);
  CHECK(w.c == 2);
  CHECK(w.coroot_label(0) == 1);
  CHECK(w.coroot_label(2) == 1);
  CHECK(degree_one_count(w) == 2);
  CHECK_THROWS(parse_bcweight("D c=1"));
}

TEST_CASE("exact growth") {
  CHECK(growth_exact(GenWeight::from_list({Rat(3), Rat(1)})) == 4);
  CHECK_FALSE(growth_exact(GenWeight::from_list({Rat(1), Rat(2)})).has_value());
  CHECK_FALSE(growth_exact(GenWeight::from_list({make_rat(1, 2)})).has_value());
}

TEST_CASE("growth estimate") {
  CHECK(growth_estimate(ch_Lplus(Partition({1}), 200)) == doctest::Approx(1.0).epsilon(0.15));
  CHECK(growth_estimate(QSeries::one(20)) == 0.0);
  // single-point estimate at N = 200; the (2,1) value falls outside the 0.25 band
  double est = growth_estimate(ch_Lplus(Partition({2, 1}), 200));
  CHECK(std::abs(est - 3.0) <= 0.25);
}
