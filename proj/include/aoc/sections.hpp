#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aoc/strip_plane.hpp"
#include "aoc/torus_homology.hpp"

namespace aoc {

struct BoundaryComponent {
  std::string orbit;
  BoundaryInvariant invariant;

  friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

enum class SectionKind { Partial, Birkhoff };

struct SectionSpec {
  std::string name;
  SectionKind kind = SectionKind::Partial;
  std::vector<BoundaryComponent> boundary;

  bool is_birkhoff() const { return kind == SectionKind::Birkhoff; }
  bool has_orbit(std::string_view orbit) const;
  /// Distinct boundary orbits in order of first appearance.
  std::vector<std::string> orbits() const;

  friend bool operator==(const SectionSpec&, const SectionSpec&) = default;
};

/// Algebraic intersections of two partial sections and their linking numbers
/// along shared boundary orbits.
struct IntersectionData {
  std::int64_t d1_into_2 = 0;  ///< boundary of the first section across the interior of the second
  std::int64_t d2_into_1 = 0;  ///< boundary of the second section across the interior of the first
  std::map<std::string, std::int64_t> links;

  friend bool operator==(const IntersectionData&, const IntersectionData&) = default;
};

enum class SectionSign { Positive, Negative, Mixed, Global };

std::string_view to_string(SectionKind k);
std::string_view to_string(SectionSign s);

struct SectionViolation {
  std::string orbit;    ///< empty when not tied to one orbit
  std::string message;
};

/// Boundary admissibility for the section's kind and, for Birkhoff sections,
/// well-defined multiplicity and linking number per orbit.
std::optional<SectionViolation> validate_section(const SectionSpec& s);

/// Throws InvalidSection.
SectionSign section_sign(const SectionSpec& s);

std::optional<SectionViolation> mult_well_defined(const SectionSpec& s);

/// nullopt when d1_into_2 - d2_into_1 + Σ links == 0, else the residual.
std::optional<std::int64_t> linking_equation_check(const IntersectionData& data);

enum class LinkConstraint { NonNegative, StrictlyPositive };

std::string_view to_string(LinkConstraint c);

/// Required sign of link_orbit(s1, s2) for a positive s1 and negative s2.
/// Throws SignHypothesisUnmet, OrbitNotShared, InvalidSection.
LinkConstraint pairwise_link_constraint(const SectionSpec& s1, const SectionSpec& s2,
                                        const std::string& orbit);

struct ExclusionVerdict {
  bool incompatible = false;
  std::vector<std::string> reasons;  ///< ordered constraint chain
};

/// Replays the mutual-exclusion argument for (positive Birkhoff, negative
/// partial) or (global Birkhoff, single-signed partial). Returns a verdict
/// with incompatible == false when neither hypothesis applies.
/// Throws InconsistentData when the data breaks the linking equation or one of
/// the non-strict intersection/linking sign constraints; InvalidSection.
ExclusionVerdict exclusion_verdict(const SectionSpec& s1, const SectionSpec& s2,
                                   const IntersectionData& data);

/// Signs of the two boundary components of the Birkhoff annulus over a
/// lozenge of the given type.
std::pair<SectionSign, SectionSign> lozenge_annulus_signs(LozengeType t);

struct NatureConflict {
  std::string first;
  std::string second;
  std::string reason;
};

struct NatureVerdict {
  FlowNature nature = FlowNature::Undetermined;
  std::optional<NatureConflict> conflict;  ///< set for mutually exclusive evidence

  bool exclusive_error() const { return conflict.has_value(); }
};

/// Throws InvalidSection.
NatureVerdict classify_nature(std::span<const SectionSpec> evidence);

struct SurgeryCoefficient {
  std::string orbit;
  std::int64_t k = 0;

  friend bool operator==(const SurgeryCoefficient&, const SurgeryCoefficient&) = default;
};

/// Minimal nonnegative Fried-Goodman coefficients making every boundary
/// multiplicity positive. Throws InvalidSection.
std::vector<SurgeryCoefficient> positivize_pipeline(const SectionSpec& s);

/// Applies the per-orbit surgeries to every boundary component.
SectionSpec apply_surgeries(const SectionSpec& s, std::span<const SurgeryCoefficient> coefficients);

}  // namespace aoc
