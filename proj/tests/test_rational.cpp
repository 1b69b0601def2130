#include <doctest.h>

#include <limits>

#include "aoc/error.hpp"
#include "aoc/rational.hpp"

using aoc::Rational;

TEST_SUITE("rational") {
  TEST_CASE("parse canonical forms") {
    CHECK(aoc::parse_rational("3/4") == aoc::make_rational(3, 4));
    CHECK(aoc::parse_rational("-2") == Rational(-2));
    CHECK(aoc::parse_rational("6/8") == aoc::make_rational(3, 4));
    CHECK(aoc::parse_rational("-10/4") == aoc::make_rational(-5, 2));
    CHECK(aoc::parse_rational("0") == Rational(0));
    CHECK(aoc::parse_rational("123456789012345678901234567890") ==
          Rational("123456789012345678901234567890"));
  }

  TEST_CASE("zero denominator is a grammar error") {
    try {
      aoc::parse_rational("1/0");
      FAIL("expected ParseError");
    } catch (const aoc::ParseError& e) {
      CHECK(e.code() == aoc::ErrorCode::ParseError);
      CHECK(e.offset() == 2);
    }
  }

  TEST_CASE("malformed inputs report the offending byte") {
    const std::pair<const char*, std::size_t> cases[] = {
        {"", 0}, {"-", 1}, {"1/", 2}, {"1/-2", 2}, {"+1", 0}, {"1.5", 1}, {"1/2/3", 3}, {" 1", 0}, {"1/02", 2},
    };
    for (const auto& [text, offset] : cases) {
      CAPTURE(text);
      try {
        aoc::parse_rational(text);
        FAIL("expected ParseError");
      } catch (const aoc::ParseError& e) {
        CHECK(e.offset() == offset);
      }
    }
  }

  TEST_CASE("format is canonical") {
    CHECK(aoc::format_rational(aoc::make_rational(3, 4)) == "3/4");
    CHECK(aoc::format_rational(aoc::make_rational(-6, 8)) == "-3/4");
    CHECK(aoc::format_rational(Rational(5)) == "5");
    CHECK(aoc::format_rational(Rational(0)) == "0");
    for (const char* text : {"7/3", "-1", "0", "-17/5", "99"}) {
      CHECK(aoc::format_rational(aoc::parse_rational(text)) == text);
    }
  }

  TEST_CASE("power handles negative exponents") {
    CHECK(aoc::power(Rational(2), 10) == Rational(1024));
    CHECK(aoc::power(aoc::make_rational(3, 2), -2) == aoc::make_rational(4, 9));
    CHECK(aoc::power(aoc::make_rational(7, 4), 0) == Rational(1));
  }

  TEST_CASE("checked arithmetic") {
    constexpr auto max = std::numeric_limits<std::int64_t>::max();
    CHECK(aoc::checked_add(2, 3) == 5);
    CHECK(aoc::checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(aoc::checked_add(max, 1), aoc::Error);
    CHECK_THROWS_AS(aoc::checked_mul(max, 2), aoc::Error);
    CHECK_THROWS_AS(aoc::checked_sub(std::numeric_limits<std::int64_t>::min(), 1), aoc::Error);
  }
}
