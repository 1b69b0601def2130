#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace aoc {

/// Homology class on the boundary torus of a blown-up closed orbit, written in
/// the (parallel, meridian) basis. For a boundary component of a section the
/// parallel coefficient is its multiplicity and the meridian coefficient its
/// linking number.
struct TorusHomologyClass {
  std::int64_t along_parallel = 0;
  std::int64_t along_meridian = 0;

  friend bool operator==(const TorusHomologyClass&, const TorusHomologyClass&) = default;
};

/// (multiplicity, linking number, period) of a closed orbit on a section boundary.
struct BoundaryInvariant {
  std::int64_t mult = 1;
  std::int64_t link = 0;
  std::int64_t period = 1;

  friend bool operator==(const BoundaryInvariant&, const BoundaryInvariant&) = default;
};

inline TorusHomologyClass homology_class(const BoundaryInvariant& inv) {
  return {inv.mult, inv.link};
}

/// Algebraic intersection with [parallel]·[meridian] = +1.
std::int64_t intersection_form(const TorusHomologyClass& c1, const TorusHomologyClass& c2);

/// Coordinates after a Fried-Goodman surgery of coefficient k:
/// (m, l) -> (m - k·l, l).
TorusHomologyClass surgery_transform(const TorusHomologyClass& c, std::int64_t k);
BoundaryInvariant surgery_transform(const BoundaryInvariant& inv, std::int64_t k);

/// Smallest k >= 0 with mult - k·link > 0. Throws NonNegativeLink if link >= 0.
std::int64_t positivizing_coefficient(const BoundaryInvariant& inv);

enum class AdmissibilityViolation { ZeroMultiplicity, PositiveLink, ZeroLinkOnBirkhoff, InvalidPeriod };

std::string_view to_string(AdmissibilityViolation v);

/// nullopt when the invariant may bound a partial (or Birkhoff) section.
std::optional<AdmissibilityViolation> check_partial_admissible(const BoundaryInvariant& inv,
                                                               bool is_birkhoff);

/// Whether `c` can be the class of a boundary component: nonzero parallel
/// coefficient, and coprime coordinates when the curve is embedded.
bool is_boundary_class(const TorusHomologyClass& c, bool embedded);

}  // namespace aoc
