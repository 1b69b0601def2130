#include <doctest.h>

#include <random>

#include "aoc/error.hpp"
#include "aoc/json_io.hpp"
#include "support.hpp"

using aoc::io::decode;
using aoc::io::encode;
using aoc::io::Json;
using test::pt;
using test::q;

namespace {

template <class T>
T round_trip(const T& value) {
  return decode<T>(Json::parse(encode(value).dump()));
}

aoc::ErrorCode decode_error(const char* text, auto tag) {
  using T = decltype(tag);
  return test::error_code_of([&] { decode<T>(Json::parse(text)); });
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("rationals are canonical strings") {
    CHECK(encode(q("6/8")) == Json("3/4"));
    CHECK(encode(aoc::Rational(-4)) == Json("-4"));
    CHECK(decode<aoc::Rational>(Json("-10/4")) == q("-5/2"));
    CHECK(decode<aoc::Rational>(Json(7)) == 7);
    CHECK(decode_error("\"1/0\"", aoc::Rational{}) == aoc::ErrorCode::ParseError);
    CHECK(decode_error("1.5", aoc::Rational{}) == aoc::ErrorCode::SchemaError);
  }

  TEST_CASE("lambda lengths") {
    const aoc::LambdaLength len = aoc::LambdaLength::monomial(q("1/2"), 0) + aoc::LambdaLength::monomial(q("1/2"), -2);
    CHECK(encode(len) == Json::parse(R"([{"coeff":"1/2","exp":-2},{"coeff":"1/2","exp":0}])"));
    CHECK(round_trip(len) == len);
    CHECK(decode_error(R"([{"coeff":"-1","exp":0}])", aoc::LambdaLength{}) == aoc::ErrorCode::SchemaError);
    CHECK(decode_error(R"([{"coeff":"1","exp":0,"x":1}])", aoc::LambdaLength{}) == aoc::ErrorCode::SchemaError);
  }

  TEST_CASE("integers stay exact") {
    CHECK(decode<std::int64_t>(Json(42)) == 42);
    CHECK(decode_error("9007199254740993", std::int64_t{}) == aoc::ErrorCode::SchemaError);
    CHECK(decode_error("\"3\"", std::int64_t{}) == aoc::ErrorCode::SchemaError);
    CHECK(decode_error("2.5", std::int64_t{}) == aoc::ErrorCode::SchemaError);
  }

  TEST_CASE("strict objects reject unknown fields") {
    CHECK(decode_error(R"({"x":"1","y":"2","z":"3"})", aoc::PlanePoint{}) == aoc::ErrorCode::SchemaError);
    CHECK(decode_error(R"({"x":"1"})", aoc::PlanePoint{}) == aoc::ErrorCode::SchemaError);
    CHECK(decode_error(R"({"name":"S","kind":"global","boundary":[]})", aoc::SectionSpec{}) ==
          aoc::ErrorCode::SchemaError);
  }

  TEST_CASE("domain round trips") {
    const aoc::Lozenge loz{pt(0, 0), pt(1, -1), aoc::LozengeType::PlusMinus};
    CHECK(round_trip(loz) == loz);
    const aoc::SuRectangle rect{pt("1/2", "0"), pt("2/3", "0"), pt("2/3", "1"), pt("1/2", "1")};
    CHECK(round_trip(rect) == rect);
    const aoc::SectionSpec s{"S", aoc::SectionKind::Birkhoff, {{"a", {2, -1, 3}}, {"b", {-1, -2, 1}}}};
    CHECK(round_trip(s) == s);
    const aoc::IntersectionData d{3, -1, {{"a", 2}, {"b", 0}}};
    CHECK(round_trip(d) == d);
    const aoc::CrossingEvent ev{"s", aoc::CrossingSide::SingularOnLeft, q("1/3"), q("-7/2")};
    const auto back = round_trip(ev);
    CHECK(back.singularity == ev.singularity);
    CHECK(back.side == ev.side);
    CHECK(back.split == ev.split);
    CHECK(back.u_position == ev.u_position);
    aoc::FoliationModel m;
    m.singularities["s"] = {2, -1, 3};
    m.lambda_hint = q("7/4");
    const auto mb = round_trip(m);
    CHECK(mb.lambda_hint == m.lambda_hint);
    CHECK(mb.singularities.at("s").period == 3);
    const aoc::PuncturedCover cover({{pt("1/2", "0"), -2, aoc::BoundaryInvariant{2, -1, 1}}, {pt(3, 3), 1, std::nullopt}});
    const auto cb = round_trip(cover);
    REQUIRE(cb.punctures().size() == 2);
    CHECK(cb.punctures()[0].invariant == cover.punctures()[0].invariant);
    CHECK_FALSE(cb.punctures()[1].invariant.has_value());
  }

  TEST_CASE("random round trips are the identity on canonical form") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    std::uniform_int_distribution<std::int64_t> expo(-20, 20);
    for (int i = 0; i < 1000; ++i) {
      const aoc::PlanePoint p{aoc::make_rational(num(rng), den(rng)), aoc::make_rational(num(rng), den(rng))};
      const Json j = encode(p);
      CHECK(encode(decode<aoc::PlanePoint>(j)) == j);
      aoc::LambdaLength len;
      for (int t = 0; t < 4; ++t) len.add_term(expo(rng), aoc::make_rational(std::abs(num(rng)) + 1, den(rng)));
      const Json lj = encode(len);
      CHECK(encode(decode<aoc::LambdaLength>(lj)) == lj);
    }
  }

  TEST_CASE("enumeration parsing") {
    CHECK(aoc::io::parse_model("positive") == aoc::PlaneModel::PositiveStrip);
    CHECK(aoc::io::parse_quadrant("-+") == aoc::Quadrant{aoc::Sign::Minus, aoc::Sign::Plus});
    CHECK(aoc::io::parse_lozenge_type("+-") == aoc::LozengeType::PlusMinus);
    CHECK(aoc::io::parse_side("left") == aoc::CrossingSide::SingularOnLeft);
    CHECK_THROWS_AS(aoc::io::parse_model("twisted"), aoc::Error);
    CHECK_THROWS_AS(aoc::io::parse_quadrant("+"), aoc::Error);
  }
}
