#include "phylotrop/column_reduction.hpp"

#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace phylotrop;
using Condition = ReductionFailure::Condition;

namespace {

const ColumnReductionSeq kFig1Seq{10, {{1, 2}, {4, 5}, {6, 7}, {8, 9}, {3, 5}, {7, 9}, {2, 5}, {9, 10}, {5, 10}}};

}  // namespace

TEST_CASE("validate_reduction", "[reduction]") {
  CHECK_FALSE(validate_reduction(kFig1Seq));
  CHECK_FALSE(validate_reduction({3, {}}));
  CHECK_FALSE(validate_reduction({0, {}}));

  auto f = validate_reduction({3, {{2, 1}, {3, 2}}});
  REQUIRE(f);
  CHECK(f->step == 2);
  CHECK(f->condition == Condition::SourceAlreadyUsed);

  f = validate_reduction({3, {{1, 2}, {1, 3}}});
  REQUIRE(f);
  CHECK(f->step == 2);
  CHECK(f->condition == Condition::RepeatedTarget);

  f = validate_reduction({3, {{1, 4}}});
  REQUIRE(f);
  CHECK(f->step == 1);
  CHECK(f->condition == Condition::IndexOutOfRange);

  // b_k = a_k is excluded too.
  f = validate_reduction({3, {{2, 2}}});
  REQUIRE(f);
  CHECK(f->condition == Condition::SourceAlreadyUsed);

  // A later a may reuse an earlier b.
  CHECK_FALSE(validate_reduction({3, {{1, 2}, {2, 3}}}));
}

TEST_CASE("apply_reduction subtracts columns in order", "[reduction]") {
  PuiseuxMatrix m(1, 3);
  for (int c = 0; c < 3; ++c) m.at(0, c) = PuiseuxPoly::monomial(Integer(1), Rational(c));
  PuiseuxMatrix before = m;

  CHECK(apply_reduction(m, {3, {}}) == m);

  auto r = apply_reduction(m, {3, {{1, 2}, {2, 3}}});
  CHECK(m == before);
  CHECK(r.at(0, 0) == PuiseuxPoly::constant(1) - PuiseuxPoly::monomial(Integer(1), Rational(1)));
  CHECK(r.at(0, 1) == PuiseuxPoly::monomial(Integer(1), Rational(1)) - PuiseuxPoly::monomial(Integer(1), Rational(2)));
  CHECK(r.at(0, 2) == before.at(0, 2));

  CHECK_THROWS_AS(apply_reduction(m, {3, {{1, 2}, {1, 3}}}), InvalidReduction);
  CHECK_THROWS_AS(apply_reduction(m, {4, {}}), InvalidReduction);
}

TEST_CASE("InvalidReduction carries the failure", "[reduction]") {
  try {
    apply_reduction(PuiseuxMatrix(2, 3), {3, {{2, 1}, {3, 2}}});
    FAIL("expected InvalidReduction");
  } catch (const InvalidReduction& e) {
    CHECK(e.failure().step == 2);
    CHECK(e.failure().condition == Condition::SourceAlreadyUsed);
  }
}

TEST_CASE("reduction preserves the determinant", "[reduction][property]") {
  Rng rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 5;
    PuiseuxMatrix m = oracle::random_matrix(rng, n);
    auto seq = oracle::random_reduction(rng, n);
    REQUIRE_FALSE(validate_reduction(seq));
    REQUIRE(determinant(apply_reduction(m, seq)) == determinant(m));
  }
}
