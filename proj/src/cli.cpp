#include "aoc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "aoc/drift_cover.hpp"
#include "aoc/error.hpp"
#include "aoc/json_io.hpp"
#include "aoc/measured_holonomy.hpp"
#include "aoc/sections.hpp"
#include "aoc/strip_plane.hpp"
#include "aoc/torus_homology.hpp"

namespace aoc::cli {

namespace {

using io::decode;
using io::encode;
using io::Json;
using io::StrictObject;

struct Outcome {
  Json report;
  int code = kSuccess;
  std::string summary;
};

// Scenario file payload: the top-level object minus "schema" and "command".
class Scenario {
 public:
  Scenario(const std::string& path, const std::string& command) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SchemaError, "cannot open scenario file '" + path + "'");
    try {
      doc_ = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    reader_.emplace(doc_, "scenario");
    const Json& schema = reader_->required("schema");
    if (!schema.is_string() || schema.get<std::string>() != io::kSchema) {
      throw Error(ErrorCode::SchemaError, "scenario schema must be \"" + std::string(io::kSchema) + "\"");
    }
    if (const Json* cmd = reader_->optional("command")) {
      if (!cmd->is_string() || cmd->get<std::string>() != command) {
        throw Error(ErrorCode::SchemaError, "scenario is not a '" + command + "' scenario");
      }
    }
  }

  StrictObject& fields() { return *reader_; }

 private:
  Json doc_;
  std::optional<StrictObject> reader_;
};

Json base_report(const std::string& command) {
  return Json{{"schema", std::string(io::kSchema)}, {"command", command}};
}

Outcome violation(Json report, const std::string& code, const std::string& message) {
  report["violation"] = Json{{"code", code}, {"message", message}};
  return {std::move(report), kViolation, code + ": " + message};
}

PlanePoint parse_point_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::SchemaError, "point must be written x,y; got '" + text + "'");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

// ------------------------------------------------------------------ surgery

struct SurgeryArgs {
  std::string file;
  std::optional<std::int64_t> mult;
  std::optional<std::int64_t> link;
  std::int64_t k = 0;
  std::int64_t period = 1;
  bool positivize = false;
};

Outcome run_surgery(const SurgeryArgs& args) {
  Json report = base_report("surgery");
  BoundaryInvariant inv;
  std::int64_t k = args.k;
  bool positivize = args.positivize;
  if (!args.file.empty()) {
    Scenario sc(args.file, "surgery");
    auto& f = sc.fields();
    inv.mult = decode<std::int64_t>(f.required("mult"));
    inv.link = decode<std::int64_t>(f.required("link"));
    if (const Json* p = f.optional("period")) inv.period = decode<std::int64_t>(*p);
    if (const Json* kk = f.optional("k")) k = decode<std::int64_t>(*kk);
    if (const Json* pos = f.optional("positivize")) {
      if (!pos->is_boolean()) throw Error(ErrorCode::SchemaError, "positivize must be a boolean");
      positivize = pos->get<bool>();
    }
    f.finish();
  } else {
    if (!args.mult || !args.link) throw Error(ErrorCode::SchemaError, "surgery needs --mult and --link or -f");
    inv = {*args.mult, *args.link, args.period};
  }
  if (positivize) {
    k = positivizing_coefficient(inv);
    report["k"] = k;
  }
  const BoundaryInvariant out = surgery_transform(inv, k);
  report["mult"] = out.mult;
  report["link"] = out.link;
  return {report, kSuccess,
          "surgery k=" + std::to_string(k) + ": mult " + std::to_string(inv.mult) + " -> " + std::to_string(out.mult)};
}

// -------------------------------------------------------------------- strip

struct StripArgs {
  std::string file;
  std::string model;
  std::string point = "0,0";
  std::string type = "++";
  std::string quadrant = "++";
};

struct StripInput {
  PlaneModel model = PlaneModel::Trivial;
  PlanePoint point{0, 0};
  std::string selector;
};

StripInput read_strip(const StripArgs& args, const std::string& selector_key, bool needs_point) {
  StripInput in;
  in.selector = selector_key == "type" ? args.type : args.quadrant;
  if (!args.file.empty()) {
    Scenario sc(args.file, "strip");
    auto& f = sc.fields();
    in.model = decode<PlaneModel>(f.required("model"));
    if (needs_point) {
      if (const Json* p = f.optional("point")) in.point = decode<PlanePoint>(*p);
      if (const Json* s = f.optional(selector_key)) {
        if (!s->is_string()) throw Error(ErrorCode::SchemaError, selector_key + " must be a string");
        in.selector = s->get<std::string>();
      }
    }
    f.finish();
  } else {
    if (args.model.empty()) throw Error(ErrorCode::SchemaError, "strip needs --model or -f");
    in.model = io::parse_model(args.model);
    in.point = parse_point_flag(args.point);
  }
  return in;
}

Outcome run_strip_classify(const StripArgs& args) {
  const StripInput in = read_strip(args, "type", false);
  Json report = base_report("strip");
  report["model"] = std::string(to_string(in.model));
  const FlowNature nature = classify_model(in.model);
  report["nature"] = std::string(to_string(nature));
  return {report, kSuccess, std::string(to_string(in.model)) + " model: " + std::string(to_string(nature))};
}

Outcome run_strip_lozenge(const StripArgs& args) {
  const StripInput in = read_strip(args, "type", true);
  Json report = base_report("strip");
  const auto loz = lozenge_at(in.model, in.point, io::parse_lozenge_type(in.selector));
  report["lozenge"] = loz ? encode(*loz) : Json(nullptr);
  return {report, kSuccess, loz ? "lozenge found" : "no lozenge of that type"};
}

Outcome run_strip_complete(const StripArgs& args) {
  const StripInput in = read_strip(args, "quadrant", true);
  Json report = base_report("strip");
  const auto result = quadrant_complete(in.model, in.point, io::parse_quadrant(in.selector));
  report["complete"] = result.complete;
  if (result.witness) {
    report["witness"] = Json{{"stable", encode(result.witness->first)},
                             {"unstable", encode(result.witness->second)}};
  }
  return {report, kSuccess, result.complete ? "quadrant complete" : "quadrant incomplete"};
}

// -------------------------------------------------------------------- drift

struct DriftArgs {
  std::string file;
  std::optional<std::int64_t> n1;
  std::optional<std::int64_t> n2;
};

struct DriftInput {
  PuncturedCover cover;
  std::optional<PolyCurve> curve;
};

DriftInput read_cover_and_curve(const std::string& file) {
  if (file.empty()) throw Error(ErrorCode::SchemaError, "this drift command needs -f <scenario.json>");
  Scenario sc(file, "drift");
  auto& f = sc.fields();
  DriftInput in;
  in.cover = decode<PuncturedCover>(f.required("cover"));
  in.curve = decode<PolyCurve>(f.required("curve"));
  f.finish();
  return in;
}

Outcome run_drift_eval(const DriftArgs& args) {
  const DriftInput in = read_cover_and_curve(args.file);
  Json report = base_report("drift");
  Json windings = Json::array();
  for (const auto& p : in.cover.punctures()) windings.push_back(winding_number(*in.curve, p.position));
  const std::int64_t value = drift(*in.curve, in.cover);
  report["drift"] = value;
  report["winding_numbers"] = windings;
  return {report, kSuccess, "drift = " + std::to_string(value)};
}

Outcome run_drift_check_local(const DriftArgs& args) {
  const DriftInput in = read_cover_and_curve(args.file);
  Json report = base_report("drift");
  const LocalDriftCheck check = local_drift_sum_check(*in.curve, in.cover);
  report["drift"] = check.drift;
  report["enclosed_sum"] = check.enclosed_sum;
  report["accepted"] = check.accepted();
  if (!check.accepted()) {
    return violation(report, "LocalDriftMismatch",
                     "drift " + std::to_string(check.drift) + " != enclosed sum " + std::to_string(check.enclosed_sum));
  }
  return {report, kSuccess, "local drift sum holds: " + std::to_string(check.drift)};
}

Outcome run_drift_witness(const DriftArgs& args) {
  const DriftInput in = read_cover_and_curve(args.file);
  Json report = base_report("drift");
  const auto witness = witness_positive_boundary(*in.curve, in.cover);
  report["drift"] = drift(*in.curve, in.cover);
  report["witness"] = witness ? encode(*witness) : Json(nullptr);
  if (witness && witness->invariant) report["witness_sign_consistent"] = sign_consistency(*witness);
  return {report, kSuccess, witness ? "positive boundary witness found" : "no witness (drift >= 0)"};
}

Outcome run_drift_rectangle(const DriftArgs& args) {
  Json report = base_report("drift");
  std::optional<std::int64_t> n1 = args.n1;
  std::optional<std::int64_t> n2 = args.n2;
  std::string summary;
  if (!args.file.empty()) {
    Scenario sc(args.file, "drift");
    auto& f = sc.fields();
    const PlaneModel model = decode<PlaneModel>(f.required("model"));
    const Lozenge loz = decode<Lozenge>(f.required("lozenge"));
    const PlanePoint eta = decode<PlanePoint>(f.required("eta"));
    if (const Json* v = f.optional("n1")) n1 = decode<std::int64_t>(*v);
    if (const Json* v = f.optional("n2")) n2 = decode<std::int64_t>(*v);
    f.finish();
    const SuRectangle rect = su_rectangle_from_lozenge(model, loz, eta);
    report["rectangle"] = encode(rect);
    summary = "su-rectangle built";
  }
  if (n1 || n2) {
    if (!n1 || !n2) throw Error(ErrorCode::SchemaError, "both n1 and n2 are required");
    report["boundary_drift"] = rectangle_boundary_drift(*n1, *n2);
    summary += (summary.empty() ? "" : "; ") + std::string("boundary drift ") +
               std::to_string(report["boundary_drift"].get<std::int64_t>());
  }
  if (summary.empty()) throw Error(ErrorCode::SchemaError, "drift rectangle needs --n1/--n2 or -f");
  return {report, kSuccess, summary};
}

// ----------------------------------------------------------------- holonomy

struct HolonomyArgs {
  std::string file;
  std::optional<std::int64_t> mult;
  std::int64_t period = 1;
  std::string side = "right";
};

Json maybe_value(const FoliationModel& model, const LambdaLength& len) {
  if (!model.lambda_hint) return nullptr;
  return encode(len.evaluate(*model.lambda_hint));
}

Outcome run_holonomy_exponent(const HolonomyArgs& args) {
  Json report = base_report("holonomy");
  SingularityData s;
  CrossingSide side = io::parse_side(args.side);
  if (!args.file.empty()) {
    Scenario sc(args.file, "holonomy");
    auto& f = sc.fields();
    s = decode<SingularityData>(f.required("singularity"));
    side = decode<CrossingSide>(f.required("side"));
    f.finish();
  } else {
    if (!args.mult) throw Error(ErrorCode::SchemaError, "holonomy exponent needs --mult or -f");
    s.mult = *args.mult;
    s.period = args.period;
  }
  if (s.period < 1) throw Error(ErrorCode::SchemaError, "period must be >= 1");
  report["exponent"] = crossing_exponent(s, side);
  return {report, kSuccess, "crossing exponent " + std::to_string(report["exponent"].get<std::int64_t>())};
}

Outcome run_holonomy_compose(const HolonomyArgs& args) {
  if (args.file.empty()) throw Error(ErrorCode::SchemaError, "holonomy compose needs -f <scenario.json>");
  Scenario sc(args.file, "holonomy");
  auto& f = sc.fields();
  const FoliationModel model = decode<FoliationModel>(f.required("model"));
  LambdaLength len = LambdaLength::unit();
  if (const Json* l = f.optional("length")) len = decode<LambdaLength>(*l);
  const auto events = decode<std::vector<CrossingEvent>>(f.required("events"));
  std::optional<std::vector<CrossingEvent>> tail;
  if (const Json* t = f.optional("tail")) tail = decode<std::vector<CrossingEvent>>(*t);
  f.finish();

  std::optional<std::span<const CrossingEvent>> tail_span;
  if (tail) tail_span = std::span<const CrossingEvent>(*tail);
  const auto result = generalized_holonomy(len, events, tail_span, model);

  Json report = base_report("holonomy");
  report["status"] = result.defined() ? "defined" : "undefined";
  report["length"] = encode(result.length);
  report["value"] = maybe_value(model, result.length);
  if (result.period_factor) report["period_factor"] = encode(*result.period_factor);
  if (!result.defined()) report["reason"] = "blow-up";
  return {report, kSuccess, result.defined() ? "generalized holonomy defined" : "generalized holonomy blows up"};
}

Outcome run_holonomy_contract(const HolonomyArgs& args) {
  if (args.file.empty()) throw Error(ErrorCode::SchemaError, "holonomy contract needs -f <scenario.json>");
  Scenario sc(args.file, "holonomy");
  auto& f = sc.fields();
  const FoliationModel model = decode<FoliationModel>(f.required("model"));
  const auto events = decode<std::vector<CrossingEvent>>(f.required("events"));
  f.finish();

  Json report = base_report("holonomy");
  const auto cert = positive_side_contraction(model, events);
  report["accepted"] = cert.accepted;
  report["exponents"] = cert.exponents;
  report["composed"] = encode(cert.composed);
  report["value"] = maybe_value(model, cert.composed);
  if (!cert.accepted) return violation(report, "ContractionFailed", "composed length is not dominated");
  return {report, kSuccess, "positive-side contraction certified"};
}

Outcome run_holonomy_spacing(const HolonomyArgs& args) {
  if (args.file.empty()) throw Error(ErrorCode::SchemaError, "holonomy spacing needs -f <scenario.json>");
  Scenario sc(args.file, "holonomy");
  auto& f = sc.fields();
  const FoliationModel model = decode<FoliationModel>(f.required("model"));
  const auto events = decode<std::vector<CrossingEvent>>(f.required("events"));
  std::vector<LambdaLength> lengths;
  const Json& ls = f.required("lengths");
  if (!ls.is_array()) throw Error(ErrorCode::SchemaError, "lengths: expected an array");
  for (const auto& l : ls) lengths.push_back(decode<LambdaLength>(l));
  const Rational ell = decode<Rational>(f.required("ell"));
  const Rational delta = decode<Rational>(f.required("delta"));
  f.finish();

  Json report = base_report("holonomy");
  const auto bad = validate_event_spacing(events, lengths, ell, delta, model);
  report["accepted"] = !bad.has_value();
  if (bad) {
    report["pair"] = Json::array({bad->first, bad->second});
    return violation(report, "SpacingViolated",
                     "events " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                         " are within delta");
  }
  return {report, kSuccess, "event spacing respected"};
}

// ----------------------------------------------------------------- sections

Outcome run_sections(const std::string& action, const std::string& file) {
  if (file.empty()) throw Error(ErrorCode::SchemaError, "sections " + action + " needs -f <scenario.json>");
  Scenario sc(file, "sections");
  auto& f = sc.fields();
  Json report = base_report("sections");

  if (action == "validate") {
    const SectionSpec s = decode<SectionSpec>(f.required("section"));
    f.finish();
    if (auto v = validate_section(s)) {
      report["valid"] = false;
      return violation(report, "InvalidSection", v->message);
    }
    report["valid"] = true;
    report["sign"] = std::string(to_string(section_sign(s)));
    return {report, kSuccess, "section '" + s.name + "' is valid"};
  }

  if (action == "link-eq") {
    const IntersectionData data = decode<IntersectionData>(f.required("data"));
    f.finish();
    const auto residual = linking_equation_check(data);
    report["accepted"] = !residual.has_value();
    if (residual) {
      report["residual"] = *residual;
      return violation(report, "LinkingEquation", "residual " + std::to_string(*residual));
    }
    return {report, kSuccess, "linking equation holds"};
  }

  if (action == "link-sign") {
    const SectionSpec s1 = decode<SectionSpec>(f.required("s1"));
    const SectionSpec s2 = decode<SectionSpec>(f.required("s2"));
    const Json& orbit = f.required("orbit");
    f.finish();
    if (!orbit.is_string()) throw Error(ErrorCode::SchemaError, "orbit must be a string");
    const auto c = pairwise_link_constraint(s1, s2, orbit.get<std::string>());
    report["constraint"] = std::string(to_string(c));
    return {report, kSuccess, "required link sign: " + std::string(to_string(c))};
  }

  if (action == "exclude") {
    const SectionSpec s1 = decode<SectionSpec>(f.required("s1"));
    const SectionSpec s2 = decode<SectionSpec>(f.required("s2"));
    const IntersectionData data = decode<IntersectionData>(f.required("data"));
    f.finish();
    const auto verdict = exclusion_verdict(s1, s2, data);
    report["verdict"] = verdict.incompatible ? "incompatible" : "no-verdict";
    report["reasons"] = verdict.reasons;
    if (verdict.incompatible) return {report, kViolation, "incompatible: " + verdict.reasons.back()};
    return {report, kSuccess, "no verdict"};
  }

  if (action == "classify") {
    const Json& ev = f.required("evidence");
    f.finish();
    if (!ev.is_array()) throw Error(ErrorCode::SchemaError, "evidence: expected an array");
    std::vector<SectionSpec> evidence;
    for (const auto& s : ev) evidence.push_back(decode<SectionSpec>(s));
    const auto verdict = classify_nature(evidence);
    if (verdict.conflict) {
      report["verdict"] = "mutually-exclusive";
      report["pair"] = Json::array({verdict.conflict->first, verdict.conflict->second});
      return violation(report, "MutuallyExclusive", verdict.conflict->reason);
    }
    report["nature"] = std::string(to_string(verdict.nature));
    return {report, kSuccess, "nature: " + std::string(to_string(verdict.nature))};
  }

  if (action == "positivize") {
    const SectionSpec s = decode<SectionSpec>(f.required("section"));
    f.finish();
    const auto coefficients = positivize_pipeline(s);
    const SectionSpec out = apply_surgeries(s, coefficients);
    Json list = Json::array();
    for (const auto& c : coefficients) list.push_back(Json{{"orbit", c.orbit}, {"k", c.k}});
    report["coefficients"] = list;
    report["section"] = encode(out);
    report["sign"] = std::string(to_string(section_sign(out)));
    const SectionSpec evidence[] = {out};
    report["nature"] = std::string(to_string(classify_nature(evidence).nature));
    return {report, kSuccess, "positivized '" + s.name + "'"};
  }

  throw Error(ErrorCode::SchemaError, "unknown sections action '" + action + "'");
}

// ----------------------------------------------------------------- selftest

Outcome run_selftest(std::size_t count) {
  std::uint64_t seed = 0x5eed;
  if (const char* env = std::getenv("AOC_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::SchemaError, "AOC_SEED must be an unsigned integer");
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> small(-100, 100);
  std::uniform_int_distribution<std::int64_t> negative_link(-9, -1);

  Json checks = Json::array();
  bool all_passed = true;
  const auto record = [&](const std::string& name, bool passed) {
    checks.push_back(Json{{"name", name}, {"passed", passed}, {"instances", count}});
    all_passed = all_passed && passed;
  };

  bool ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    const TorusHomologyClass c{small(rng), small(rng)};
    const std::int64_t k = small(rng);
    ok = ok && surgery_transform(surgery_transform(c, k), -k) == c;
  }
  record("surgery-involution", ok);

  ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    std::int64_t mult = 0;
    while (mult == 0) mult = small(rng) % 10;
    const BoundaryInvariant inv{mult, negative_link(rng), 1};
    const std::int64_t k = positivizing_coefficient(inv);
    ok = ok && surgery_transform(inv, k).mult > 0 && (k == 0 || surgery_transform(inv, k - 1).mult <= 0);
  }
  record("positivizing-minimal", ok);

  ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    const Rational cx = make_rational(small(rng), 7);
    const Rational cy = make_rational(small(rng), 7);
    const Rational r = make_rational(1 + (small(rng) + 100) % 20, 3);
    const PolyCurve square({{cx - r, cy - r}, {cx + r, cy - r}, {cx + r, cy + r}, {cx - r, cy + r}});
    const PlanePoint probe{make_rational(small(rng), 11), make_rational(small(rng), 13)};
    if (on_curve(square, probe)) continue;
    ok = ok && winding_number(square.reversed(), probe) == -winding_number(square, probe) &&
         winding_number(square, probe) == (encloses(square, probe) ? 1 : 0);
  }
  record("winding-orientation", ok);

  Json report = base_report("selftest");
  report["seed"] = seed;
  report["checks"] = checks;
  report["passed"] = all_passed;
  if (!all_passed) return violation(report, "SelfTestFailed", "a randomized property check failed");
  return {report, kSuccess, "self-test passed (seed " + std::to_string(seed) + ")"};
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant calculus for Birkhoff sections and R-covered Anosov flows", "aoc"};
  app.require_subcommand(1);

  SurgeryArgs surgery;
  auto* surgery_cmd = app.add_subcommand("surgery", "Fried-Goodman surgery on (mult, link)");
  surgery_cmd->add_option("-f,--file", surgery.file, "scenario JSON");
  surgery_cmd->add_option("--mult", surgery.mult, "multiplicity");
  surgery_cmd->add_option("--link", surgery.link, "linking number");
  surgery_cmd->add_option("--k", surgery.k, "surgery coefficient");
  surgery_cmd->add_option("--period", surgery.period, "period");
  surgery_cmd->add_flag("--positivize", surgery.positivize, "use the minimal positivizing coefficient");

  StripArgs strip;
  auto* strip_cmd = app.add_subcommand("strip", "model bifoliated planes");
  strip_cmd->require_subcommand(1);
  const auto add_strip_options = [&](CLI::App* sub) {
    sub->add_option("-f,--file", strip.file, "scenario JSON");
    sub->add_option("--model", strip.model, "trivial | positive | negative");
  };
  auto* strip_classify = strip_cmd->add_subcommand("classify", "flow nature of a model");
  add_strip_options(strip_classify);
  auto* strip_lozenge = strip_cmd->add_subcommand("lozenge", "lozenge with a given corner");
  add_strip_options(strip_lozenge);
  strip_lozenge->add_option("--point", strip.point, "corner as x,y");
  strip_lozenge->add_option("--type", strip.type, "++ | +-");
  auto* strip_complete = strip_cmd->add_subcommand("complete", "quadrant completeness");
  add_strip_options(strip_complete);
  strip_complete->add_option("--point", strip.point, "point as x,y");
  strip_complete->add_option("--quadrant", strip.quadrant, "++ | +- | -+ | --");

  DriftArgs drift_args;
  auto* drift_cmd = app.add_subcommand("drift", "drift homomorphism on punctured covers");
  drift_cmd->require_subcommand(1);
  auto* drift_eval = drift_cmd->add_subcommand("eval", "drift of a closed curve");
  auto* drift_check = drift_cmd->add_subcommand("check-local", "drift equals enclosed local drifts");
  auto* drift_witness = drift_cmd->add_subcommand("witness", "enclosed positive boundary puncture");
  auto* drift_rect = drift_cmd->add_subcommand("rectangle", "su-rectangle and its boundary drift");
  for (auto* sub : {drift_eval, drift_check, drift_witness, drift_rect}) {
    sub->add_option("-f,--file", drift_args.file, "scenario JSON");
  }
  drift_rect->add_option("--n1", drift_args.n1, "deck count at the first corner");
  drift_rect->add_option("--n2", drift_args.n2, "deck count at the second corner");

  HolonomyArgs holonomy;
  auto* holonomy_cmd = app.add_subcommand("holonomy", "crossing-holonomy calculus");
  holonomy_cmd->require_subcommand(1);
  auto* hol_exponent = holonomy_cmd->add_subcommand("exponent", "crossing exponent ±mult·period");
  auto* hol_compose = holonomy_cmd->add_subcommand("compose", "generalized holonomy of a crossing sequence");
  auto* hol_contract = holonomy_cmd->add_subcommand("contract", "positive-side contraction certificate");
  auto* hol_spacing = holonomy_cmd->add_subcommand("spacing", "validate event spacing against (ell, delta)");
  for (auto* sub : {hol_exponent, hol_compose, hol_contract, hol_spacing}) {
    sub->add_option("-f,--file", holonomy.file, "scenario JSON");
  }
  hol_exponent->add_option("--mult", holonomy.mult, "multiplicity");
  hol_exponent->add_option("--period", holonomy.period, "period");
  hol_exponent->add_option("--side", holonomy.side, "right | left");

  std::string sections_file;
  auto* sections_cmd = app.add_subcommand("sections", "partial and Birkhoff section certificates");
  sections_cmd->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> section_actions;
  for (const char* name : {"validate", "link-eq", "link-sign", "exclude", "classify", "positivize"}) {
    auto* sub = sections_cmd->add_subcommand(name, std::string("sections ") + name);
    sub->add_option("-f,--file", sections_file, "scenario JSON");
    section_actions.emplace_back(name, sub);
  }

  std::size_t selftest_count = 1000;
  auto* selftest_cmd = app.add_subcommand("selftest", "randomized property checks (seed from AOC_SEED)");
  selftest_cmd->add_option("--count", selftest_count, "instances per check");

  std::vector<const char*> argv{"aoc"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  std::string command = "aoc";
  try {
    Outcome outcome;
    if (surgery_cmd->parsed()) {
      command = "surgery";
      outcome = run_surgery(surgery);
    } else if (strip_cmd->parsed()) {
      command = "strip";
      if (strip_classify->parsed()) outcome = run_strip_classify(strip);
      else if (strip_lozenge->parsed()) outcome = run_strip_lozenge(strip);
      else outcome = run_strip_complete(strip);
    } else if (drift_cmd->parsed()) {
      command = "drift";
      if (drift_eval->parsed()) outcome = run_drift_eval(drift_args);
      else if (drift_check->parsed()) outcome = run_drift_check_local(drift_args);
      else if (drift_witness->parsed()) outcome = run_drift_witness(drift_args);
      else outcome = run_drift_rectangle(drift_args);
    } else if (holonomy_cmd->parsed()) {
      command = "holonomy";
      if (hol_exponent->parsed()) outcome = run_holonomy_exponent(holonomy);
      else if (hol_compose->parsed()) outcome = run_holonomy_compose(holonomy);
      else if (hol_contract->parsed()) outcome = run_holonomy_contract(holonomy);
      else outcome = run_holonomy_spacing(holonomy);
    } else if (sections_cmd->parsed()) {
      command = "sections";
      for (const auto& [name, sub] : section_actions) {
        if (sub->parsed()) outcome = run_sections(name, sections_file);
      }
    } else {
      command = "selftest";
      outcome = run_selftest(selftest_count);
    }
    out << outcome.report.dump(2) << "\n";
    err << outcome.summary << "\n";
    return outcome.code;
  } catch (const Error& e) {
    const bool parse_failure = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::SchemaError;
    Json report = base_report(command);
    const Json detail{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    report[parse_failure ? "error" : "violation"] = detail;
    out << report.dump(2) << "\n";
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return parse_failure ? kParseError : kViolation;
  }
}

}  // namespace aoc::cli
