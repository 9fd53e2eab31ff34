#include "doctest.h"

#include "horolamp/numeric.hpp"
#include "horolamp/ring.hpp"
#include "oracle.hpp"

using namespace horolamp;

TEST_CASE("parse and name round trip") {
  CHECK(Ring::parse("Z").name() == "Z");
  CHECK(Ring::parse("Z/2").name() == "Z/2");
  CHECK(Ring::parse("Z/12").name() == "Z/12");
  CHECK(!Ring::parse("Z").modular());
  CHECK(Ring::parse("Z/7").modulus() == 7);
  CHECK_THROWS_AS(Ring::parse(""), ParseError);
  CHECK_THROWS_AS(Ring::parse("Q"), ParseError);
  CHECK_THROWS_AS(Ring::parse("Z/"), ParseError);
  CHECK_THROWS_AS(Ring::parse("Z/0"), ParseError);
  CHECK_THROWS_AS(Ring::parse("Z/-3"), ParseError);
  CHECK_THROWS_AS(Ring::parse("Z/2x"), ParseError);
}

TEST_CASE("residues stay canonical") {
  const Ring R = Ring::residues(6);
  CHECK(R.reduce(-1) == 5);
  CHECK(R.reduce(6) == 0);
  CHECK(R.reduce(Int("-1000000000000000007")) == R.reduce(Int("-1000000000000000007") % 6 + 6));
  CHECK(R.add(4, 5) == 3);
  CHECK(R.sub(1, 5) == 2);
  CHECK(R.neg(2) == 4);
  CHECK(R.mul(4, 5) == 2);
  CHECK(R.one() == 1);
  const Ring unit = Ring::residues(1);
  CHECK(unit.one() == 0);  // the zero ring
  CHECK(unit.reduce(42) == 0);
}

TEST_CASE("integer ring is exact") {
  const Ring Z = Ring::integers();
  CHECK(Z.reduce(Int("123456789012345678901234567890")) ==
        Int("123456789012345678901234567890"));
  CHECK(Z.mul(Int("1000000000000"), Int("1000000000000")) == Int("1000000000000000000000000"));
  CHECK(Z.neg(5) == -5);
}

TEST_CASE("units and inverses") {
  const Ring Z = Ring::integers();
  CHECK(Z.is_unit(1));
  CHECK(Z.is_unit(-1));
  CHECK(!Z.is_unit(0));
  CHECK(!Z.is_unit(2));
  CHECK(Z.inv(-1) == -1);
  CHECK_THROWS_AS(Z.inv(2), NotInvertible);

  const Ring R6 = Ring::residues(6);
  CHECK(R6.is_unit(1));
  CHECK(R6.is_unit(5));
  CHECK(!R6.is_unit(2));
  CHECK(!R6.is_unit(3));
  CHECK(!R6.is_unit(0));
  CHECK(R6.inv(5) == 5);
  try {
    R6.inv(2);
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.element() == "2");
    CHECK(e.ring() == "Z/6");
    CHECK(std::string(e.what()) == "2 is not invertible in Z/6");
  }

  const Ring R7 = Ring::residues(7);
  for (int a = 1; a < 7; ++a) {
    CHECK(R7.is_unit(a));
    CHECK(R7.mul(R7.inv(a), a) == 1);
  }
}

TEST_CASE("element enumeration order") {
  const Ring R4 = Ring::residues(4);
  CHECK(R4.elements(std::nullopt) == std::vector<Int>{0, 1, 2, 3});
  CHECK(R4.elements(99) == std::vector<Int>{0, 1, 2, 3});  // bound ignored
  const Ring Z = Ring::integers();
  CHECK(Z.elements(2) == std::vector<Int>{0, 1, -1, 2, -2});
  CHECK(Z.elements(0) == std::vector<Int>{0});
  CHECK_THROWS_AS(Z.elements(std::nullopt), NotSupported);
  CHECK_THROWS_AS(Z.elements(-1), NotSupported);
}

TEST_CASE("extended gcd certificate") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Int a = oracle::pick(rng, -1000, 1000);
    const Int b = oracle::pick(rng, -1000, 1000);
    Int x, y;
    const Int g = ext_gcd(a, b, x, y);
    CHECK(g >= 0);
    CHECK(a * x + b * y == g);
    if (g != 0) {
      CHECK(a % g == 0);
      CHECK(b % g == 0);
    } else {
      CHECK(a == 0);
      CHECK(b == 0);
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(52, 26) == Int("495918532948104"));
  for (long long n = 1; n < 12; ++n)
    for (long long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}
