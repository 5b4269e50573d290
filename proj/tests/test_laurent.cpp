#include <doctest.h>

#include "core/laurent.hpp"

using namespace vb;

TEST_CASE("laurent arithmetic basics") {
  Laurent a = Laurent::monomial('A', 2) + Laurent::monomial('A', -2);
  Laurent b = Laurent::monomial('A', 2) - Laurent::monomial('A', 2);
  CHECK(b.is_zero());
  CHECK((a * Laurent::one()) == a);
  CHECK((a - a).is_zero());
  Laurent d = a * a;
  CHECK(d == Laurent::monomial('A', 4) + Laurent(2) + Laurent::monomial('A', -4));
}

TEST_CASE("laurent printing is canonical ascending") {
  Laurent p = Laurent::monomial('A', 2, -1) + Laurent::monomial('A', -2);
  CHECK(p.str() == "A^-2 + -1*A^2");
  CHECK(Laurent::zero().str() == "0");
  CHECK(Laurent(3).str() == "3");
  CHECK(Laurent::monomial('q', 1).str() == "q^1");
}

TEST_CASE("laurent parse round trip") {
  for (const char* s : {"A^-2 + -1*A^2", "0", "3", "q^1", "1/2*q^-3 + 5", "-2*A^4 + A^6"}) {
    Laurent p = Laurent::parse(s);
    CHECK(Laurent::parse(p.str()) == p);
  }
  CHECK(Laurent::parse("A^-2 + -1*A^2") ==
        Laurent::monomial('A', -2) - Laurent::monomial('A', 2));
  CHECK_THROWS_AS(Laurent::parse("A + q"), Error);
}

TEST_CASE("laurent exact division") {
  Laurent delta = Laurent::monomial('A', 2, -1) + Laurent::monomial('A', -2, -1);
  Laurent p = delta * delta * Laurent::monomial('A', -5, 3);
  Laurent q;
  REQUIRE(p.try_divide(delta, q));
  CHECK(q == delta * Laurent::monomial('A', -5, 3));
  Laurent r;
  bool divisible = (delta + Laurent::one()).try_divide(delta, r);
  CHECK_FALSE(divisible);
  // divisible high-span case
  Laurent big = Laurent::monomial('A', 40) - Laurent::one();
  Laurent lin = Laurent::monomial('A', 1) - Laurent::one();
  Laurent quo;
  REQUIRE(big.try_divide(lin, quo));
  CHECK(quo * lin == big);
}

TEST_CASE("laurent fraction comparison") {
  Laurent delta = Laurent::monomial('A', 2, -1) + Laurent::monomial('A', -2, -1);
  LaurentFraction f{Laurent::monomial('A', 3, -1), delta};
  LaurentFraction g{Laurent::monomial('A', 3, -1) * delta, delta * delta};
  CHECK(f == g);
  CHECK(f != LaurentFraction::of(Laurent::one()));
}
