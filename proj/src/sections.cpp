#include "aoc/sections.hpp"

#include <algorithm>
#include <tuple>

#include "aoc/error.hpp"
#include "aoc/rational.hpp"

namespace aoc {

std::string_view to_string(SectionKind k) {
  return k == SectionKind::Birkhoff ? "birkhoff" : "partial";
}

std::string_view to_string(SectionSign s) {
  switch (s) {
    case SectionSign::Positive: return "positive";
    case SectionSign::Negative: return "negative";
    case SectionSign::Mixed: return "mixed";
    case SectionSign::Global: return "global";
  }
  return "unknown";
}

std::string_view to_string(LinkConstraint c) {
  return c == LinkConstraint::StrictlyPositive ? "strictly-positive" : "non-negative";
}

bool SectionSpec::has_orbit(std::string_view orbit) const {
  return std::any_of(boundary.begin(), boundary.end(),
                     [&](const BoundaryComponent& c) { return c.orbit == orbit; });
}

std::vector<std::string> SectionSpec::orbits() const {
  std::vector<std::string> out;
  for (const auto& c : boundary) {
    if (std::find(out.begin(), out.end(), c.orbit) == out.end()) out.push_back(c.orbit);
  }
  return out;
}

std::optional<SectionViolation> mult_well_defined(const SectionSpec& s) {
  for (std::size_t i = 0; i < s.boundary.size(); ++i) {
    for (std::size_t j = i + 1; j < s.boundary.size(); ++j) {
      const auto& a = s.boundary[i];
      const auto& b = s.boundary[j];
      if (a.orbit != b.orbit) continue;
      const auto& ia = a.invariant;
      const auto& ib = b.invariant;
      if (s.is_birkhoff()) {
        if (ia.mult != ib.mult) {
          return SectionViolation{a.orbit, "boundary components on orbit '" + a.orbit +
                                               "' have different multiplicities " +
                                               std::to_string(ia.mult) + " and " + std::to_string(ib.mult)};
        }
        if (ia.link != ib.link) {
          return SectionViolation{a.orbit, "boundary components on orbit '" + a.orbit +
                                               "' have different linking numbers " +
                                               std::to_string(ia.link) + " and " + std::to_string(ib.link)};
        }
      } else if ((ia.mult > 0) != (ib.mult > 0) && (ia.link != 0 || ib.link != 0)) {
        return SectionViolation{a.orbit, "boundary components on orbit '" + a.orbit +
                                             "' disagree in sign with nonzero linking number"};
      }
    }
  }
  return std::nullopt;
}

std::optional<SectionViolation> validate_section(const SectionSpec& s) {
  for (const auto& c : s.boundary) {
    if (c.orbit.empty()) return SectionViolation{"", "boundary component with empty orbit identifier"};
    if (auto v = check_partial_admissible(c.invariant, s.is_birkhoff())) {
      return SectionViolation{c.orbit, "orbit '" + c.orbit + "': " + std::string(to_string(*v))};
    }
  }
  return mult_well_defined(s);
}

namespace {

void require_valid(const SectionSpec& s) {
  if (auto v = validate_section(s)) {
    throw Error(ErrorCode::InvalidSection, "section '" + s.name + "': " + v->message);
  }
}

std::string shared_orbit_list(const std::vector<std::string>& orbits) {
  std::string out;
  for (const auto& o : orbits) out += (out.empty() ? "'" : ", '") + o + "'";
  return out;
}

}  // namespace

SectionSign section_sign(const SectionSpec& s) {
  require_valid(s);
  if (s.boundary.empty()) return SectionSign::Global;
  const bool all_positive = std::all_of(s.boundary.begin(), s.boundary.end(),
                                        [](const auto& c) { return c.invariant.mult > 0; });
  const bool all_negative = std::all_of(s.boundary.begin(), s.boundary.end(),
                                        [](const auto& c) { return c.invariant.mult < 0; });
  if (all_positive) return SectionSign::Positive;
  if (all_negative) return SectionSign::Negative;
  return SectionSign::Mixed;
}

std::optional<std::int64_t> linking_equation_check(const IntersectionData& data) {
  std::int64_t residual = checked_sub(data.d1_into_2, data.d2_into_1);
  for (const auto& [orbit, link] : data.links) residual = checked_add(residual, link);
  if (residual == 0) return std::nullopt;
  return residual;
}

LinkConstraint pairwise_link_constraint(const SectionSpec& s1, const SectionSpec& s2,
                                        const std::string& orbit) {
  if (section_sign(s1) != SectionSign::Positive || section_sign(s2) != SectionSign::Negative) {
    throw Error(ErrorCode::SignHypothesisUnmet,
                "expected a positive first section and a negative second section");
  }
  if (!s1.has_orbit(orbit) || !s2.has_orbit(orbit)) {
    throw Error(ErrorCode::OrbitNotShared, "orbit '" + orbit + "' is not on both boundaries");
  }
  if (s1.is_birkhoff() || s2.is_birkhoff()) return LinkConstraint::StrictlyPositive;
  return LinkConstraint::NonNegative;
}

ExclusionVerdict exclusion_verdict(const SectionSpec& s1, const SectionSpec& s2,
                                   const IntersectionData& data) {
  const SectionSign sign1 = section_sign(s1);
  const SectionSign sign2 = section_sign(s2);

  for (const auto& [orbit, link] : data.links) {
    if (!s1.has_orbit(orbit) || !s2.has_orbit(orbit)) {
      throw Error(ErrorCode::InconsistentData, "link given for orbit '" + orbit + "' which is not shared");
    }
  }
  if (auto residual = linking_equation_check(data)) {
    throw Error(ErrorCode::InconsistentData,
                "linking equation does not vanish (residual " + std::to_string(*residual) + ")");
  }

  const bool positive_vs_negative =
      s1.is_birkhoff() && sign1 == SectionSign::Positive && sign2 == SectionSign::Negative;
  const bool global_vs_signed = s1.is_birkhoff() && sign1 == SectionSign::Global &&
                                (sign2 == SectionSign::Positive || sign2 == SectionSign::Negative);

  ExclusionVerdict verdict;
  if (!positive_vs_negative && !global_vs_signed) {
    verdict.reasons.push_back("hypotheses unmet: need (positive Birkhoff, negative partial) or "
                              "(global Birkhoff, single-signed partial); got (" +
                              std::string(to_string(sign1)) + " " + std::string(to_string(s1.kind)) + ", " +
                              std::string(to_string(sign2)) + " " + std::string(to_string(s2.kind)) + ")");
    return verdict;
  }

  const std::string d12 = std::to_string(data.d1_into_2);
  const std::string d21 = std::to_string(data.d2_into_1);

  if (positive_vs_negative) {
    if (data.d1_into_2 < 0) {
      throw Error(ErrorCode::InconsistentData,
                  "positive boundary of '" + s1.name + "' must meet Int '" + s2.name +
                      "' non-negatively, got " + d12);
    }
    if (data.d2_into_1 > 0) {
      throw Error(ErrorCode::InconsistentData,
                  "negative boundary of '" + s2.name + "' must meet Int '" + s1.name +
                      "' non-positively, got " + d21);
    }
    for (const auto& [orbit, link] : data.links) {
      if (link < 0) {
        throw Error(ErrorCode::InconsistentData,
                    "link along shared orbit '" + orbit + "' must be >= 0 (monotone boundary graphs), got " +
                        std::to_string(link));
      }
    }

    verdict.reasons.push_back("boundary of '" + s1.name + "' is positive: d1_into_2 = " + d12 + " >= 0");
    verdict.reasons.push_back("boundary of '" + s2.name + "' is negative: d2_into_1 = " + d21 + " <= 0");
    verdict.reasons.push_back("shared links are >= 0 along positive/negative boundary pairs");
    verdict.reasons.push_back(
        "linking equation d1_into_2 - d2_into_1 + sum(links) = 0 has only non-negative terms, so all vanish");

    std::vector<std::string> shared;
    for (const auto& orbit : s2.orbits()) {
      if (!s1.has_orbit(orbit)) {
        verdict.reasons.push_back("boundary orbit '" + orbit + "' of '" + s2.name +
                                  "' is not on the boundary of the Birkhoff section '" + s1.name +
                                  "', so it must cross its interior but d2_into_1 is forced to 0");
        verdict.incompatible = true;
        return verdict;
      }
      shared.push_back(orbit);
    }
    verdict.reasons.push_back("d2_into_1 = 0 and '" + s1.name +
                              "' meets every orbit, so every boundary orbit of '" + s2.name +
                              "' is shared: " + shared_orbit_list(shared));
    verdict.reasons.push_back("shared link must be strictly positive but equation forces 0");
    verdict.incompatible = true;
    return verdict;
  }

  // Global Birkhoff section against a single-signed partial section.
  if (data.d1_into_2 != 0) {
    throw Error(ErrorCode::InconsistentData,
                "'" + s1.name + "' has no boundary, so d1_into_2 must be 0, got " + d12);
  }
  if (sign2 == SectionSign::Negative && data.d2_into_1 > 0) {
    throw Error(ErrorCode::InconsistentData,
                "negative boundary of '" + s2.name + "' must meet Int '" + s1.name +
                    "' non-positively, got " + d21);
  }
  if (sign2 == SectionSign::Positive && data.d2_into_1 < 0) {
    throw Error(ErrorCode::InconsistentData,
                "positive boundary of '" + s2.name + "' must meet Int '" + s1.name +
                    "' non-negatively, got " + d21);
  }
  verdict.reasons.push_back("'" + s1.name + "' has empty boundary: d1_into_2 = 0");
  verdict.reasons.push_back("linking equation forces d2_into_1 = 0");
  verdict.reasons.push_back("every boundary component of '" + s2.name + "' is " +
                            std::string(to_string(sign2)) +
                            ", so its crossings with Int '" + s1.name +
                            "' share one sign and their total 0 means none occur");
  verdict.reasons.push_back("global section '" + s1.name + "' meets every orbit, including boundary orbit '" +
                            s2.boundary.front().orbit + "' of '" + s2.name + "': contradiction");
  verdict.incompatible = true;
  return verdict;
}

std::pair<SectionSign, SectionSign> lozenge_annulus_signs(LozengeType t) {
  if (t == LozengeType::PlusPlus) return {SectionSign::Positive, SectionSign::Positive};
  return {SectionSign::Negative, SectionSign::Negative};
}

namespace {

enum class Evidence { PositiveBirkhoff, NegativeBirkhoff, GlobalBirkhoff, PositivePartial, NegativePartial, None };

Evidence classify_evidence(const SectionSpec& s) {
  const SectionSign sign = section_sign(s);
  if (s.is_birkhoff()) {
    switch (sign) {
      case SectionSign::Positive: return Evidence::PositiveBirkhoff;
      case SectionSign::Negative: return Evidence::NegativeBirkhoff;
      case SectionSign::Global: return Evidence::GlobalBirkhoff;
      case SectionSign::Mixed: return Evidence::None;
    }
  }
  if (sign == SectionSign::Positive) return Evidence::PositivePartial;
  if (sign == SectionSign::Negative) return Evidence::NegativePartial;
  return Evidence::None;
}

bool is_positive(Evidence e) { return e == Evidence::PositiveBirkhoff || e == Evidence::PositivePartial; }
bool is_negative(Evidence e) { return e == Evidence::NegativeBirkhoff || e == Evidence::NegativePartial; }

// Reason why the two pieces of evidence cannot coexist, or nullopt.
std::optional<std::string> conflict_between(Evidence a, Evidence b) {
  for (int pass = 0; pass < 2; ++pass) {
    if (a == Evidence::PositiveBirkhoff && is_negative(b)) {
      return std::string("a positive Birkhoff section excludes every negative partial section");
    }
    if (a == Evidence::NegativeBirkhoff && is_positive(b)) {
      return std::string("a negative Birkhoff section excludes every positive partial section");
    }
    if (a == Evidence::GlobalBirkhoff && (is_positive(b) || is_negative(b))) {
      return std::string("a global section excludes every single-signed partial section");
    }
    std::swap(a, b);
  }
  return std::nullopt;
}

}  // namespace

NatureVerdict classify_nature(std::span<const SectionSpec> evidence) {
  std::vector<Evidence> kinds;
  kinds.reserve(evidence.size());
  for (const auto& s : evidence) kinds.push_back(classify_evidence(s));

  std::optional<NatureConflict> best;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    for (std::size_t j = i + 1; j < evidence.size(); ++j) {
      auto reason = conflict_between(kinds[i], kinds[j]);
      if (!reason) continue;
      NatureConflict c{evidence[i].name, evidence[j].name, *reason};
      if (c.second < c.first) std::swap(c.first, c.second);
      // Report the lexicographically smallest pair so the verdict does not
      // depend on evidence order.
      if (!best || std::tie(c.first, c.second, c.reason) < std::tie(best->first, best->second, best->reason)) {
        best = std::move(c);
      }
    }
  }

  NatureVerdict verdict;
  if (best) {
    verdict.conflict = std::move(best);
    return verdict;
  }
  const auto has = [&](Evidence e) { return std::find(kinds.begin(), kinds.end(), e) != kinds.end(); };
  if (has(Evidence::PositiveBirkhoff)) verdict.nature = FlowNature::PositivelyTwisted;
  else if (has(Evidence::GlobalBirkhoff)) verdict.nature = FlowNature::Flat;
  else if (has(Evidence::NegativeBirkhoff)) verdict.nature = FlowNature::NegativelyTwisted;
  return verdict;
}

std::vector<SurgeryCoefficient> positivize_pipeline(const SectionSpec& s) {
  require_valid(s);
  if (!s.is_birkhoff()) {
    throw Error(ErrorCode::InvalidSection, "section '" + s.name + "' is not a Birkhoff section");
  }
  std::vector<SurgeryCoefficient> out;
  for (const auto& orbit : s.orbits()) {
    auto it = std::find_if(s.boundary.begin(), s.boundary.end(),
                           [&](const BoundaryComponent& c) { return c.orbit == orbit; });
    out.push_back({orbit, positivizing_coefficient(it->invariant)});
  }
  return out;
}

SectionSpec apply_surgeries(const SectionSpec& s, std::span<const SurgeryCoefficient> coefficients) {
  SectionSpec out = s;
  for (auto& c : out.boundary) {
    for (const auto& coeff : coefficients) {
      if (coeff.orbit == c.orbit) c.invariant = surgery_transform(c.invariant, coeff.k);
    }
  }
  return out;
}

}  // namespace aoc
