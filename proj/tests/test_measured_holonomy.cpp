#include <doctest.h>

#include <random>

#include "aoc/error.hpp"
#include "aoc/measured_holonomy.hpp"
#include "support.hpp"

using aoc::CrossingEvent;
using aoc::CrossingSide;
using aoc::ErrorCode;
using aoc::FoliationModel;
using aoc::LambdaLength;
using aoc::Rational;
using aoc::SingularityData;
using test::q;

namespace {

constexpr auto kRight = CrossingSide::SingularOnRight;
constexpr auto kLeft = CrossingSide::SingularOnLeft;

FoliationModel model_with(std::map<std::string, SingularityData> s, std::optional<Rational> lambda = {}) {
  FoliationModel m;
  m.singularities = std::move(s);
  m.lambda_hint = lambda;
  m.validate();
  return m;
}

std::map<std::int64_t, oracle::Q> terms_of(const LambdaLength& len) {
  return {len.terms().begin(), len.terms().end()};
}

}  // namespace

TEST_SUITE("measured_holonomy") {
  TEST_CASE("crossing exponent examples") {
    CHECK(aoc::crossing_exponent({2, -1, 1}, kRight) == -2);
    CHECK(aoc::crossing_exponent({2, -1, 1}, kLeft) == 2);
    CHECK(aoc::crossing_exponent({-1, -1, 3}, kRight) == 3);
    for (std::int64_t m = -10; m <= 10; ++m) {
      for (std::int64_t p = 1; p <= 5; ++p) {
        if (m == 0) continue;
        CHECK(aoc::crossing_exponent({m, -1, p}, kRight) == -aoc::crossing_exponent({m, -1, p}, kLeft));
      }
    }
  }

  TEST_CASE("model validation") {
    CHECK_THROWS_AS(model_with({{"a", {0, -1, 1}}}), aoc::Error);
    CHECK_THROWS_AS(model_with({{"a", {1, 0, 1}}}), aoc::Error);
    CHECK_THROWS_AS(model_with({{"a", {1, -1, 0}}}), aoc::Error);
    CHECK_THROWS_AS(model_with({{"a", {1, -1, 1}}}, Rational(1)), aoc::Error);
    const auto m = model_with({{"a", {1, -1, 1}}});
    CHECK(test::error_code_of([&] { m.singularity("b"); }) == ErrorCode::UnknownSingularity);
  }

  TEST_CASE("lambda length algebra") {
    LambdaLength a = LambdaLength::monomial(q("1/2"), 0) + LambdaLength::monomial(q("1/2"), -2);
    CHECK(a.evaluate(4) == q("17/32"));
    CHECK(a.mass() == 1);
    CHECK(a.max_exponent() == 0);
    CHECK(a.min_exponent() == -2);
    CHECK(a.shifted(3).max_exponent() == 3);
    CHECK(a.scaled(2).mass() == 2);
    CHECK((a * a).evaluate(4) == q("17/32") * q("17/32"));
    CHECK(LambdaLength::monomial(0, 5).empty());
    CHECK_THROWS_AS(a.add_term(1, q("-1/3")), aoc::Error);
  }

  TEST_CASE("apply crossing examples") {
    const auto m = model_with({{"s2", {2, -1, 1}}, {"t1", {-1, -1, 1}}});
    const auto half = aoc::apply_crossing(LambdaLength::unit(), {"s2", kRight, q("1/2"), 0}, m);
    CHECK(half == LambdaLength::monomial(q("1/2"), 0) + LambdaLength::monomial(q("1/2"), -2));
    CHECK(half.evaluate(4) == q("17/32"));
    CHECK(aoc::apply_crossing(LambdaLength::unit(), {"t1", kRight, 1, 0}, m) == LambdaLength::monomial(1, 1));
    const LambdaLength any = LambdaLength::monomial(q("3/7"), 2) + LambdaLength::monomial(5, -1);
    CHECK(aoc::apply_crossing(any, {"s2", kRight, 0, 0}, m) == any);
    CHECK(test::error_code_of([&] { aoc::apply_crossing(any, {"zz", kRight, 1, 0}, m); }) ==
          ErrorCode::UnknownSingularity);
    CHECK_THROWS_AS(aoc::apply_crossing(any, {"s2", kRight, q("3/2"), 0}, m), aoc::Error);
  }

  TEST_CASE("apply crossing matches direct evaluation") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> mult(-4, 4);
    std::uniform_int_distribution<std::int64_t> period(1, 3);
    std::uniform_int_distribution<long> num(0, 20);
    std::uniform_int_distribution<std::int64_t> expo(-3, 3);
    for (int i = 0; i < 1000; ++i) {
      std::int64_t mm = 0;
      while (mm == 0) mm = mult(rng);
      const auto m = model_with({{"s", {mm, -1, period(rng)}}});
      LambdaLength len;
      for (int t = 0; t < 3; ++t) len.add_term(expo(rng), aoc::make_rational(num(rng) + 1, 7));
      const CrossingEvent ev{"s", rng() % 2 ? kRight : kLeft, aoc::make_rational(num(rng), 20), 0};
      const std::int64_t k = aoc::crossing_exponent(m.singularity("s"), ev.side);
      const LambdaLength out = aoc::apply_crossing(len, ev, m);
      for (const Rational& lambda : {Rational(2), q("3/2"), q("7/4")}) {
        const oracle::Q before = oracle::evaluate(terms_of(len), lambda);
        CHECK(oracle::evaluate(terms_of(out), lambda) == oracle::crossing_value(before, ev.split, k, lambda));
        if (ev.split > 0 && k < 0) CHECK(out.evaluate(lambda) < before);
        if (ev.split > 0 && k > 0) CHECK(out.evaluate(lambda) > before);
      }
      for (const auto& [e, c] : out.terms()) CHECK(c > 0);
    }
  }

  TEST_CASE("generalized holonomy") {
    const auto m = model_with({{"a", {1, -1, 1}}, {"b", {3, -2, 1}}, {"c", {-2, -1, 1}}});
    const LambdaLength len = LambdaLength::monomial(q("5/3"), 1);

    const auto id = aoc::generalized_holonomy(len, {}, std::nullopt, m);
    CHECK(id.defined());
    CHECK(id.length == len);

    const std::vector<CrossingEvent> down{{"a", kRight, 1, 0}, {"b", kRight, 1, 1}};
    const auto shifted = aoc::generalized_holonomy(len, down, std::nullopt, m);
    CHECK(shifted.defined());
    CHECK(shifted.length == LambdaLength::monomial(q("5/3"), -3));

    const std::vector<CrossingEvent> up{{"c", kRight, 1, 5}};
    const auto blow = aoc::generalized_holonomy(len, {}, std::optional<std::span<const CrossingEvent>>{up}, m);
    CHECK_FALSE(blow.defined());
    REQUIRE(blow.period_factor.has_value());
    CHECK(*blow.period_factor == LambdaLength::monomial(1, 2));
    const std::vector<CrossingEvent> back{{"c", kLeft, 1, 5}};
    const auto calm = aoc::generalized_holonomy(len, {}, std::optional<std::span<const CrossingEvent>>{back}, m);
    CHECK(calm.defined());
    CHECK(calm.length == len);
    const std::vector<CrossingEvent> none;
    CHECK(aoc::generalized_holonomy(len, {}, std::optional<std::span<const CrossingEvent>>{none}, m).defined());

    const std::vector<CrossingEvent> bad{{"a", kRight, 1, 2}, {"b", kRight, 1, 2}};
    CHECK(test::error_code_of([&] { aoc::generalized_holonomy(len, bad, std::nullopt, m); }) ==
          ErrorCode::NonIncreasingUPositions);
    const std::vector<CrossingEvent> late{{"a", kRight, 1, 1}};
    CHECK(test::error_code_of([&] {
            aoc::generalized_holonomy(len, down, std::optional<std::span<const CrossingEvent>>{late}, m);
          }) == ErrorCode::NonIncreasingUPositions);
  }

  TEST_CASE("positive side contraction") {
    const auto m = model_with({{"a", {1, -1, 1}}, {"b", {3, -1, 1}}, {"n", {-1, -1, 1}}}, Rational(2));
    const std::vector<CrossingEvent> two{{"a", kRight, 1, 0}, {"b", kRight, 1, 1}};
    const auto cert = aoc::positive_side_contraction(m, two);
    CHECK(cert.accepted);
    CHECK(cert.exponents == std::vector<std::int64_t>{-1, -3});
    const std::vector<CrossingEvent> neg{{"n", kRight, 1, 0}};
    CHECK(test::error_code_of([&] { aoc::positive_side_contraction(m, neg); }) == ErrorCode::PreconditionViolated);
    const std::vector<CrossingEvent> left{{"a", kLeft, 1, 0}};
    CHECK(test::error_code_of([&] { aoc::positive_side_contraction(m, left); }) == ErrorCode::PreconditionViolated);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> split(0, 10);
    std::vector<CrossingEvent> many;
    for (int i = 0; i < 100; ++i) many.push_back({rng() % 2 ? "a" : "b", kRight, aoc::make_rational(split(rng), 10), i});
    const auto big = aoc::positive_side_contraction(m, many);
    CHECK(big.accepted);
    CHECK(big.composed.evaluate(2) <= 1);
  }

  TEST_CASE("contraction never lengthens at any lambda") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> mult(1, 4);
    std::uniform_int_distribution<long> split(0, 12);
    std::uniform_int_distribution<int> count(1, 8);
    for (int i = 0; i < 300; ++i) {
      FoliationModel m;
      const int n = count(rng);
      std::vector<CrossingEvent> events;
      for (int j = 0; j < n; ++j) {
        const std::string id = "s" + std::to_string(j);
        m.singularities[id] = {mult(rng), -1, mult(rng)};
        events.push_back({id, kRight, aoc::make_rational(split(rng), 12), j});
      }
      const LambdaLength len = LambdaLength::monomial(q("2/3"), 2) + LambdaLength::monomial(1, -1);
      const auto out = aoc::generalized_holonomy(len, events, std::nullopt, m);
      for (const Rational& lambda : {q("11/10"), Rational(2), q("7/4"), Rational(5)}) {
        CHECK(out.length.evaluate(lambda) <= len.evaluate(lambda));
      }
    }
  }

  TEST_CASE("event spacing") {
    const auto m = model_with({{"a", {1, -1, 1}}}, Rational(2));
    const std::vector<LambdaLength> lens{LambdaLength::monomial(q("1/2"), 0), LambdaLength::monomial(q("1/2"), 0)};
    const std::vector<CrossingEvent> far{{"a", kRight, 1, 0}, {"a", kRight, 1, 2}};
    CHECK_FALSE(aoc::validate_event_spacing(far, lens, 1, 1, m).has_value());
    const std::vector<CrossingEvent> near{{"a", kRight, 1, 0}, {"a", kRight, 1, q("1/2")}};
    const auto bad = aoc::validate_event_spacing(near, lens, 1, 1, m);
    REQUIRE(bad.has_value());
    CHECK(bad->first == 0);
    CHECK(bad->second == 1);
    // Long segments are exempt.
    const std::vector<LambdaLength> long_lens{LambdaLength::monomial(3, 0), LambdaLength::monomial(q("1/2"), 0)};
    CHECK_FALSE(aoc::validate_event_spacing(near, long_lens, 1, 1, m).has_value());
    CHECK_FALSE(aoc::validate_event_spacing(std::span(far).first(1), std::span(lens).first(1), 1, 1, m).has_value());
    CHECK(test::error_code_of([&] { aoc::validate_event_spacing(far, std::span(lens).first(1), 1, 1, m); }) ==
          ErrorCode::LengthMismatch);
    const auto no_hint = model_with({{"a", {1, -1, 1}}});
    CHECK(test::error_code_of([&] { aoc::validate_event_spacing(far, lens, 1, 1, no_hint); }) ==
          ErrorCode::MissingLambdaHint);
  }
}
