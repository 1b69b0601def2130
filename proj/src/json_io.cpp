#include "aoc/json_io.hpp"

#include <algorithm>

#include "aoc/error.hpp"

namespace aoc::io {

namespace {

constexpr std::int64_t kMaxExactInteger = (std::int64_t{1} << 53) - 1;

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::SchemaError, message);
}

Json encode_integer(std::int64_t v) {
  if (v > kMaxExactInteger || v < -kMaxExactInteger) {
    schema_error("integer " + std::to_string(v) + " is not exactly representable in JSON");
  }
  return v;
}

}  // namespace

StrictObject::StrictObject(const Json& j, std::string context) : json_(j), context_(std::move(context)) {
  if (!json_.is_object()) schema_error(context_ + ": expected an object");
}

bool StrictObject::has(const std::string& key) const { return json_.contains(key); }

const Json& StrictObject::required(const std::string& key) {
  if (!json_.contains(key)) schema_error(context_ + ": missing field '" + key + "'");
  consumed_.push_back(key);
  return json_.at(key);
}

const Json* StrictObject::optional(const std::string& key) {
  if (!json_.contains(key)) return nullptr;
  consumed_.push_back(key);
  return &json_.at(key);
}

void StrictObject::finish() const {
  for (const auto& [key, value] : json_.items()) {
    if (std::find(consumed_.begin(), consumed_.end(), key) == consumed_.end()) {
      schema_error(context_ + ": unknown field '" + key + "'");
    }
  }
}

PlaneModel parse_model(std::string_view text) {
  if (text == "trivial") return PlaneModel::Trivial;
  if (text == "positive") return PlaneModel::PositiveStrip;
  if (text == "negative") return PlaneModel::NegativeStrip;
  schema_error("unknown plane model '" + std::string(text) + "'");
}

Quadrant parse_quadrant(std::string_view text) {
  if (text.size() == 2 && (text[0] == '+' || text[0] == '-') && (text[1] == '+' || text[1] == '-')) {
    return {text[0] == '+' ? Sign::Plus : Sign::Minus, text[1] == '+' ? Sign::Plus : Sign::Minus};
  }
  schema_error("quadrant must be one of ++, +-, -+, --; got '" + std::string(text) + "'");
}

LozengeType parse_lozenge_type(std::string_view text) {
  if (text == "++") return LozengeType::PlusPlus;
  if (text == "+-") return LozengeType::PlusMinus;
  schema_error("lozenge type must be ++ or +-; got '" + std::string(text) + "'");
}

CrossingSide parse_side(std::string_view text) {
  if (text == "right") return CrossingSide::SingularOnRight;
  if (text == "left") return CrossingSide::SingularOnLeft;
  schema_error("side must be right or left; got '" + std::string(text) + "'");
}

std::string_view to_string(CrossingSide side) {
  return side == CrossingSide::SingularOnRight ? "right" : "left";
}

std::string to_string(Quadrant q) {
  std::string out;
  out += q.stable == Sign::Plus ? '+' : '-';
  out += q.unstable == Sign::Plus ? '+' : '-';
  return out;
}

// ---------------------------------------------------------------- encode

Json encode(const Rational& v) { return format_rational(v); }

Json encode(const PlanePoint& p) { return Json{{"x", encode(p.x)}, {"y", encode(p.y)}}; }

Json encode(const BoundaryInvariant& inv) {
  return Json{{"mult", encode_integer(inv.mult)}, {"link", encode_integer(inv.link)},
              {"period", encode_integer(inv.period)}};
}

Json encode(const Puncture& p) {
  Json j{{"position", encode(p.position)}, {"local_drift", encode_integer(p.local_drift)}};
  if (p.invariant) j["invariant"] = encode(*p.invariant);
  return j;
}

Json encode(const PuncturedCover& cover) {
  Json list = Json::array();
  for (const auto& p : cover.punctures()) list.push_back(encode(p));
  return Json{{"punctures", list}};
}

Json encode(const PolyCurve& curve) {
  Json list = Json::array();
  for (const auto& v : curve.vertices()) list.push_back(encode(v));
  return list;
}

Json encode(const Lozenge& loz) {
  return Json{{"corner1", encode(loz.corner1)}, {"corner2", encode(loz.corner2)},
              {"type", std::string(to_string(loz.type))}};
}

Json encode(const SuRectangle& rect) {
  return Json{{"eta1", encode(rect.eta1)}, {"g_eta1", encode(rect.g_eta1)},
              {"g_eta2", encode(rect.g_eta2)}, {"eta2", encode(rect.eta2)}};
}

Json encode(const SingularityData& s) {
  return Json{{"mult", encode_integer(s.mult)}, {"link", encode_integer(s.link)},
              {"period", encode_integer(s.period)}};
}

Json encode(const FoliationModel& model) {
  Json sings = Json::object();
  for (const auto& [id, s] : model.singularities) sings[id] = encode(s);
  Json j{{"singularities", sings}};
  if (model.lambda_hint) j["lambda"] = encode(*model.lambda_hint);
  return j;
}

Json encode(const LambdaLength& len) {
  Json list = Json::array();
  for (const auto& [e, c] : len.terms()) list.push_back(Json{{"coeff", encode(c)}, {"exp", encode_integer(e)}});
  return list;
}

Json encode(const CrossingEvent& ev) {
  return Json{{"singularity", ev.singularity}, {"side", std::string(to_string(ev.side))},
              {"split", encode(ev.split)}, {"u", encode(ev.u_position)}};
}

Json encode(const std::vector<CrossingEvent>& events) {
  Json list = Json::array();
  for (const auto& ev : events) list.push_back(encode(ev));
  return list;
}

Json encode(const SectionSpec& s) {
  Json boundary = Json::array();
  for (const auto& c : s.boundary) {
    boundary.push_back(Json{{"orbit", c.orbit}, {"mult", encode_integer(c.invariant.mult)},
                            {"link", encode_integer(c.invariant.link)},
                            {"period", encode_integer(c.invariant.period)}});
  }
  return Json{{"name", s.name}, {"kind", std::string(to_string(s.kind))}, {"boundary", boundary}};
}

Json encode(const IntersectionData& data) {
  Json links = Json::object();
  for (const auto& [orbit, link] : data.links) links[orbit] = encode_integer(link);
  return Json{{"d1_into_2", encode_integer(data.d1_into_2)},
              {"d2_into_1", encode_integer(data.d2_into_1)},
              {"links", links}};
}

// ---------------------------------------------------------------- decode

namespace {

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) schema_error(what + ": expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array()) schema_error(what + ": expected an array");
  return j;
}

}  // namespace

template <>
Rational decode<Rational>(const Json& j) {
  // Integers are accepted as numbers too; fractions must be strings.
  if (j.is_number_integer()) return make_rational(decode<std::int64_t>(j));
  return parse_rational(as_string(j, "rational"));
}

template <>
std::int64_t decode<std::int64_t>(const Json& j) {
  if (!j.is_number_integer()) schema_error("expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxExactInteger)) {
    schema_error("integer out of exact range");
  }
  const auto v = j.get<std::int64_t>();
  if (v > kMaxExactInteger || v < -kMaxExactInteger) schema_error("integer out of exact range");
  return v;
}

template <>
PlanePoint decode<PlanePoint>(const Json& j) {
  StrictObject obj(j, "point");
  PlanePoint p{decode<Rational>(obj.required("x")), decode<Rational>(obj.required("y"))};
  obj.finish();
  return p;
}

template <>
BoundaryInvariant decode<BoundaryInvariant>(const Json& j) {
  StrictObject obj(j, "invariant");
  BoundaryInvariant inv;
  inv.mult = decode<std::int64_t>(obj.required("mult"));
  inv.link = decode<std::int64_t>(obj.required("link"));
  if (const Json* p = obj.optional("period")) inv.period = decode<std::int64_t>(*p);
  obj.finish();
  return inv;
}

template <>
Puncture decode<Puncture>(const Json& j) {
  StrictObject obj(j, "puncture");
  Puncture p;
  p.position = decode<PlanePoint>(obj.required("position"));
  p.local_drift = decode<std::int64_t>(obj.required("local_drift"));
  if (const Json* inv = obj.optional("invariant")) p.invariant = decode<BoundaryInvariant>(*inv);
  obj.finish();
  return p;
}

template <>
PuncturedCover decode<PuncturedCover>(const Json& j) {
  StrictObject obj(j, "cover");
  std::vector<Puncture> punctures;
  for (const auto& item : as_array(obj.required("punctures"), "punctures")) {
    punctures.push_back(decode<Puncture>(item));
  }
  obj.finish();
  return PuncturedCover(std::move(punctures));
}

template <>
PolyCurve decode<PolyCurve>(const Json& j) {
  std::vector<PlanePoint> vertices;
  for (const auto& item : as_array(j, "curve")) vertices.push_back(decode<PlanePoint>(item));
  return PolyCurve(std::move(vertices));
}

template <>
Lozenge decode<Lozenge>(const Json& j) {
  StrictObject obj(j, "lozenge");
  Lozenge loz;
  loz.corner1 = decode<PlanePoint>(obj.required("corner1"));
  loz.corner2 = decode<PlanePoint>(obj.required("corner2"));
  loz.type = decode<LozengeType>(obj.required("type"));
  obj.finish();
  return loz;
}

template <>
SuRectangle decode<SuRectangle>(const Json& j) {
  StrictObject obj(j, "su-rectangle");
  SuRectangle r{decode<PlanePoint>(obj.required("eta1")), decode<PlanePoint>(obj.required("g_eta1")),
                decode<PlanePoint>(obj.required("g_eta2")), decode<PlanePoint>(obj.required("eta2"))};
  obj.finish();
  return r;
}

template <>
SingularityData decode<SingularityData>(const Json& j) {
  StrictObject obj(j, "singularity");
  SingularityData s;
  s.mult = decode<std::int64_t>(obj.required("mult"));
  s.link = decode<std::int64_t>(obj.required("link"));
  if (const Json* p = obj.optional("period")) s.period = decode<std::int64_t>(*p);
  obj.finish();
  return s;
}

template <>
FoliationModel decode<FoliationModel>(const Json& j) {
  StrictObject obj(j, "foliation model");
  FoliationModel model;
  const Json& sings = obj.required("singularities");
  if (!sings.is_object()) schema_error("singularities: expected an object");
  for (const auto& [id, s] : sings.items()) model.singularities.emplace(id, decode<SingularityData>(s));
  if (const Json* lambda = obj.optional("lambda")) model.lambda_hint = decode<Rational>(*lambda);
  obj.finish();
  model.validate();
  return model;
}

template <>
LambdaLength decode<LambdaLength>(const Json& j) {
  LambdaLength len;
  for (const auto& item : as_array(j, "lambda length")) {
    StrictObject obj(item, "lambda term");
    const Rational c = decode<Rational>(obj.required("coeff"));
    const std::int64_t e = decode<std::int64_t>(obj.required("exp"));
    obj.finish();
    if (c < 0) schema_error("lambda term: coefficient must be >= 0");
    len.add_term(e, c);
  }
  return len;
}

template <>
CrossingEvent decode<CrossingEvent>(const Json& j) {
  StrictObject obj(j, "crossing event");
  CrossingEvent ev;
  ev.singularity = as_string(obj.required("singularity"), "singularity");
  ev.side = decode<CrossingSide>(obj.required("side"));
  ev.split = decode<Rational>(obj.required("split"));
  ev.u_position = decode<Rational>(obj.required("u"));
  obj.finish();
  if (ev.split < 0 || ev.split > 1) schema_error("crossing event: split must lie in [0,1]");
  return ev;
}

template <>
std::vector<CrossingEvent> decode<std::vector<CrossingEvent>>(const Json& j) {
  std::vector<CrossingEvent> out;
  for (const auto& item : as_array(j, "events")) out.push_back(decode<CrossingEvent>(item));
  return out;
}

template <>
SectionSpec decode<SectionSpec>(const Json& j) {
  StrictObject obj(j, "section");
  SectionSpec s;
  s.name = as_string(obj.required("name"), "section name");
  const std::string kind = as_string(obj.required("kind"), "section kind");
  if (kind == "partial") s.kind = SectionKind::Partial;
  else if (kind == "birkhoff") s.kind = SectionKind::Birkhoff;
  else schema_error("section kind must be partial or birkhoff; got '" + kind + "'");
  for (const auto& item : as_array(obj.required("boundary"), "boundary")) {
    StrictObject comp(item, "boundary component");
    BoundaryComponent c;
    c.orbit = as_string(comp.required("orbit"), "orbit");
    c.invariant.mult = decode<std::int64_t>(comp.required("mult"));
    c.invariant.link = decode<std::int64_t>(comp.required("link"));
    if (const Json* p = comp.optional("period")) c.invariant.period = decode<std::int64_t>(*p);
    comp.finish();
    s.boundary.push_back(std::move(c));
  }
  obj.finish();
  return s;
}

template <>
IntersectionData decode<IntersectionData>(const Json& j) {
  StrictObject obj(j, "intersection data");
  IntersectionData data;
  data.d1_into_2 = decode<std::int64_t>(obj.required("d1_into_2"));
  data.d2_into_1 = decode<std::int64_t>(obj.required("d2_into_1"));
  if (const Json* links = obj.optional("links")) {
    if (!links->is_object()) schema_error("links: expected an object");
    for (const auto& [orbit, link] : links->items()) data.links.emplace(orbit, decode<std::int64_t>(link));
  }
  obj.finish();
  return data;
}

template <>
PlaneModel decode<PlaneModel>(const Json& j) {
  return parse_model(as_string(j, "model"));
}

template <>
Quadrant decode<Quadrant>(const Json& j) {
  return parse_quadrant(as_string(j, "quadrant"));
}

template <>
LozengeType decode<LozengeType>(const Json& j) {
  return parse_lozenge_type(as_string(j, "lozenge type"));
}

template <>
CrossingSide decode<CrossingSide>(const Json& j) {
  return parse_side(as_string(j, "side"));
}

}  // namespace aoc::io
