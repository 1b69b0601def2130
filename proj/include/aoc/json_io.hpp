#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aoc/drift_cover.hpp"
#include "aoc/measured_holonomy.hpp"
#include "aoc/sections.hpp"
#include "aoc/strip_plane.hpp"

namespace aoc::io {

using Json = nlohmann::json;

inline constexpr std::string_view kSchema = "aoc/1";

// Rationals travel as canonical strings, integers as JSON numbers with
// |n| < 2^53, λ-lengths as [{"coeff": "p/q", "exp": e}] sorted by exponent.
// Objects are read strictly: unknown keys raise SchemaError.

Json encode(const Rational& v);
Json encode(const PlanePoint& p);
Json encode(const BoundaryInvariant& inv);
Json encode(const Puncture& p);
Json encode(const PuncturedCover& cover);
Json encode(const PolyCurve& curve);
Json encode(const Lozenge& loz);
Json encode(const SuRectangle& rect);
Json encode(const SingularityData& s);
Json encode(const FoliationModel& model);
Json encode(const LambdaLength& len);
Json encode(const CrossingEvent& ev);
Json encode(const std::vector<CrossingEvent>& events);
Json encode(const SectionSpec& s);
Json encode(const IntersectionData& data);

template <class T>
T decode(const Json& j);

template <> Rational decode<Rational>(const Json& j);
template <> std::int64_t decode<std::int64_t>(const Json& j);
template <> PlanePoint decode<PlanePoint>(const Json& j);
template <> BoundaryInvariant decode<BoundaryInvariant>(const Json& j);
template <> Puncture decode<Puncture>(const Json& j);
template <> PuncturedCover decode<PuncturedCover>(const Json& j);
template <> PolyCurve decode<PolyCurve>(const Json& j);
template <> Lozenge decode<Lozenge>(const Json& j);
template <> SuRectangle decode<SuRectangle>(const Json& j);
template <> SingularityData decode<SingularityData>(const Json& j);
template <> FoliationModel decode<FoliationModel>(const Json& j);
template <> LambdaLength decode<LambdaLength>(const Json& j);
template <> CrossingEvent decode<CrossingEvent>(const Json& j);
template <> std::vector<CrossingEvent> decode<std::vector<CrossingEvent>>(const Json& j);
template <> SectionSpec decode<SectionSpec>(const Json& j);
template <> IntersectionData decode<IntersectionData>(const Json& j);
template <> PlaneModel decode<PlaneModel>(const Json& j);
template <> Quadrant decode<Quadrant>(const Json& j);
template <> LozengeType decode<LozengeType>(const Json& j);
template <> CrossingSide decode<CrossingSide>(const Json& j);

PlaneModel parse_model(std::string_view text);
Quadrant parse_quadrant(std::string_view text);
LozengeType parse_lozenge_type(std::string_view text);
CrossingSide parse_side(std::string_view text);
std::string_view to_string(CrossingSide side);
std::string to_string(Quadrant q);

/// Reads a JSON object and rejects any key not consumed before `finish()`.
class StrictObject {
 public:
  StrictObject(const Json& j, std::string context);

  bool has(const std::string& key) const;
  const Json& required(const std::string& key);
  const Json* optional(const std::string& key);
  void finish() const;

 private:
  const Json& json_;
  std::string context_;
  std::vector<std::string> consumed_;
};

}  // namespace aoc::io
