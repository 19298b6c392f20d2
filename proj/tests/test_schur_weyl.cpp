#include <stdexcept>

#include "doctest.h"
#include "lca/schur_weyl.hpp"

using namespace lca;

namespace {
DiffOp op(const char* text) { return parse_diffop(text); }
TensorVector single(int a) {
  TensorVector v(1, 0, 10);
  v.add({a}, Rat(1));
  return v;
}
}  // namespace

TEST_CASE("action on V") {
  TensorVector w1 = single(1);
  TensorVector minus_w1 = single(1);
  minus_w1 *= Rat(-1);
  CHECK(act(DiffOp::D(), w1) == minus_w1);
  CHECK(act(op("t"), w1).is_zero());
  TensorVector minus_w2 = single(2);
  minus_w2 *= Rat(-1);
  CHECK(act(op("t^-1*D"), w1) == minus_w2);
  CHECK_THROWS_AS(act(op("t^-1"), w1), std::invalid_argument);
}

TEST_CASE("action on the dual") {
  TensorVector v(0, 1, 10);
  v.add({0}, Rat(1));
  // 1^* is killed by lowering and D acts on it by 0
  CHECK(act(op("t"), v).is_zero());
  CHECK(act(DiffOp::D(), v).is_zero());
  TensorVector up = act(op("t^-1*D"), v);
  CHECK(up.terms().size() == 1);
}

TEST_CASE("cyclic spans") {
  CHECK(cyclic_span_dims(Partition({1}), Partition(), 6, GeneratorSet::Dminus) == QSeries(6, {1, 1, 1, 1, 1, 1, 1}));
  CHECK(cyclic_span_dims(Partition({1, 1}), Partition(), 5, GeneratorSet::Dminus) == QSeries(5, {1, 1, 2, 2, 3, 3}));
  CHECK(cyclic_span_dims(Partition({1}), Partition(), 6, GeneratorSet::Dsigma_minus) ==
        QSeries(6, {1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("raising generators") {
  for (auto set : {GeneratorSet::Dminus, GeneratorSet::D0minus, GeneratorSet::Dsigma_minus,
                   GeneratorSet::D0sigmabar_minus}) {
    for (const auto& g : raising_generators(set, 2, 8)) {
      CHECK(in_Dminus(g));
      if (set == GeneratorSet::Dsigma_minus) CHECK(in_Dsigma(g));
      if (set == GeneratorSet::D0sigmabar_minus) CHECK(in_D0sigmabar(g));
    }
  }
  CHECK(parse_generator_set("D0minus") == GeneratorSet::D0minus);
}

TEST_CASE("hook dimensions") {
  CHECK(dim_U(Partition({3})) == 1);
  CHECK(dim_U(Partition({2, 1})) == 2);
  CHECK(dim_U(Partition({2, 2})) == 2);
  CHECK(dim_U(Partition({3, 1})) == 3);
}

TEST_CASE("cauchy identities") {
  CHECK(cauchy_check(1, 12));
  CHECK(cauchy_check(2, 12));
  CHECK(cauchy_check(4, 12));
  CHECK(mixed_cauchy_check(1, 0, 12));
  CHECK(mixed_cauchy_check(0, 1, 12));
  CHECK(mixed_cauchy_check(1, 1, 10));
}

TEST_CASE("highest weight vector") {
  TensorVector v = hwv_construct(Partition({2, 1}), Partition(), 4);
  CHECK(annihilated_by_lowering(v, 4, 5));
  CHECK(eigenvalue(DiffOp::D(), v) == Rat(-4));
  CHECK_FALSE(eigenvalue(op("t^-1*D"), v).has_value());
}
