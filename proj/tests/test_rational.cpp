#include <limits>
#include <random>
#include <stdexcept>

#include "critidx/rational.hpp"
#include "doctest.h"

using critidx::Rational;

TEST_SUITE("rational") {
  TEST_CASE("normalises sign and common factors") {
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, -5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(3, 8) == Rational(2));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(critidx::max(Rational(1, 3), Rational(2, 5)) == Rational(2, 5));
    CHECK(critidx::abs(Rational(-7, 3)) == Rational(7, 3));
  }

  TEST_CASE("string round trip") {
    CHECK(Rational(3, 5).str() == "3/5");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "1/2/3", "--1"}) {
      CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
  }

  TEST_CASE("overflow is reported, never rounded") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    // Products that reduce back into range are fine.
    CHECK(big * Rational(1, 2) * Rational(2) == big);
  }

  TEST_CASE("field identities on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int t = 0; t < 2000; ++t) {
      int bd = d(rng);
      int cd = d(rng);
      Rational a(d(rng), 1 + (d(rng) + 50));
      Rational b(d(rng), bd == 0 ? 1 : bd);
      Rational c(d(rng), cd == 0 ? 7 : cd);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Rational(0));
      if (!b.is_zero()) CHECK(a / b * b == a);
      CHECK(Rational::parse(a.str()) == a);
      CHECK(((a < b) == (a.to_double() < b.to_double()) || a.to_double() == b.to_double()));
    }
  }
}
