#include "doctest.h"

#include "fourlines/errors.hpp"
#include "fourlines/hjchains.hpp"
#include "support.hpp"

using namespace fourlines;
using fourlines::testing::chain_suite;

TEST_CASE("expansion in value direction") {
  CHECK(fraction_to_chain(Rational(14, 11)) == make_chain({2, 2, 2, 3, 2}));
  CHECK(fraction_to_chain(Rational(11, 14)) == make_chain({1, 5, 3}));
  CHECK(fraction_to_chain(Rational(5)) == make_chain({5}));
  CHECK(fraction_to_chain(Rational(1, 4)) == make_chain({1, 2, 2, 2}));
  CHECK(chain_to_fraction(make_chain({2, 7})) == Rational(13, 7));
  CHECK_THROWS_AS(fraction_to_chain(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(fraction_to_chain(Rational(-3, 2)), std::invalid_argument);
}

TEST_CASE("chain determinants") {
  CHECK(chain_det(Chain{}) == Rational(1));
  CHECK(chain_det(make_chain({2, 7})) == Rational(13));
  CHECK(chain_det(make_chain({3, 4})) == Rational(11));
  CHECK(chain_det(make_chain({4, 2})) == Rational(7));
  CHECK(chain_det(make_chain({2, 2, 2, 3, 2})) == Rational(14));
  CHECK(chain_det(Chain{Rational(1, 2), Rational(4)}) == Rational(1));
}

TEST_CASE("degenerate chain") {
  CHECK_THROWS_AS(chain_to_fraction(make_chain({1, 1, 1})), DegenerateChain);
  CHECK_THROWS_AS(chain_to_fraction(Chain{}), std::invalid_argument);
}

TEST_CASE("cycle determinants") {
  CHECK(cycle_det(make_chain({1, 2, 6, 3})) == Rational(1));
  CHECK(cycle_det(make_chain({2, 2, 2})) == Rational(0));
  CHECK_THROWS(cycle_det(make_chain({2, 2})));
}

TEST_CASE("chain identities on exhaustive and random families") {
  const auto t = chain_suite(11);
  INFO(t.summary());
  CHECK(t.ok());
}
