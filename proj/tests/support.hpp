#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "aoc/drift_cover.hpp"
#include "aoc/rational.hpp"
#include "aoc/strip_plane.hpp"
#include "oracles.hpp"

namespace test {

inline aoc::Rational q(const char* text) { return aoc::parse_rational(text); }

inline aoc::PlanePoint pt(const char* x, const char* y) { return {q(x), q(y)}; }

template <std::integral I>
aoc::PlanePoint pt(I x, I y) {
  return {aoc::Rational(static_cast<long>(x)), aoc::Rational(static_cast<long>(y))};
}

inline aoc::PolyCurve square(const aoc::Rational& cx, const aoc::Rational& cy, const aoc::Rational& r) {
  return aoc::PolyCurve({{cx - r, cy - r}, {cx + r, cy - r}, {cx + r, cy + r}, {cx - r, cy + r}});
}

inline std::vector<std::pair<oracle::Q, oracle::Q>> as_pairs(const aoc::PolyCurve& curve) {
  std::vector<std::pair<oracle::Q, oracle::Q>> out;
  for (const auto& v : curve.vertices()) out.emplace_back(v.x, v.y);
  return out;
}

template <class Fn>
aoc::ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const aoc::Error& e) {
    return e.code();
  }
  return aoc::ErrorCode::InvalidArgument;  // sentinel; callers never expect it
}

}  // namespace test
