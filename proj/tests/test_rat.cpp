#include "doctest.h"
#include "orbitkit/rat.hpp"

using orbitkit::Rat;

TEST_CASE("rat construction canonicalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(2, -4).str() == "-1/2");  // denominator kept positive
  CHECK_THROWS_AS(Rat(1, 0), orbitkit::DivisionByZero);
}

TEST_CASE("rat string round trip") {
  for (const char* s : {"0", "1", "-1", "7", "-3/2", "22/7", "123456789123456789/2"}) {
    CHECK(Rat::parse(s).str() == s);
  }
  CHECK(Rat::parse("2/4").str() == "1/2");
  CHECK(Rat::parse("0/5").str() == "0");
  CHECK(Rat::parse("+3").str() == "3");
}

TEST_CASE("rat parse rejects garbage") {
  for (const char* s : {"", "-", "1.5", "a", "1/2/3", "1/", "/2", "1e3", " 1", "2 "}) {
    CHECK_THROWS_AS(Rat::parse(s), orbitkit::ParseError);
  }
  CHECK_THROWS_AS(Rat::parse("1/0"), orbitkit::ParseError);
}

TEST_CASE("rat arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(-a == Rat(-1, 3));
  CHECK_THROWS_AS(a / Rat(0), orbitkit::DivisionByZero);
  CHECK_THROWS_AS(Rat(0).inv(), orbitkit::DivisionByZero);

  // (1/3 + 1/5 + 1/7)*105 = 35 + 21 + 15
  Rat s = Rat(1, 3) + Rat(1, 5) + Rat(1, 7);
  CHECK(s * Rat(105) == Rat(71));
}

TEST_CASE("rat pow") {
  CHECK(Rat::pow(Rat(2, 3), 0) == Rat(1));
  CHECK(Rat::pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(Rat::pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(Rat::pow(Rat(-2), 5) == Rat(-32));
}

TEST_CASE("rat squares") {
  CHECK(Rat(0).is_square());
  CHECK(Rat(1).is_square());
  CHECK(Rat(4, 9).is_square());
  CHECK(Rat(49).is_square());
  CHECK_FALSE(Rat(2).is_square());
  CHECK_FALSE(Rat(-4).is_square());
  CHECK_FALSE(Rat(4, 3).is_square());
  CHECK(Rat(4, 9).sqrt_exact() == Rat(2, 3));
  CHECK(Rat(0).sqrt_exact() == Rat(0));
  CHECK_THROWS(Rat(2).sqrt_exact());
}

TEST_CASE("rat ordering and predicates") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(0));
  CHECK(Rat(5).is_integer());
  CHECK_FALSE(Rat(5, 2).is_integer());
  CHECK(Rat(-7, 2).sign() == -1);
  CHECK(Rat(-7, 2).abs() == Rat(7, 2));
}
