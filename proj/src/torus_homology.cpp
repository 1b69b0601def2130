#include "aoc/torus_homology.hpp"

#include <numeric>

#include "aoc/error.hpp"
#include "aoc/rational.hpp"

namespace aoc {

std::int64_t intersection_form(const TorusHomologyClass& c1, const TorusHomologyClass& c2) {
  return checked_sub(checked_mul(c1.along_parallel, c2.along_meridian),
                     checked_mul(c1.along_meridian, c2.along_parallel));
}

TorusHomologyClass surgery_transform(const TorusHomologyClass& c, std::int64_t k) {
  return {checked_sub(c.along_parallel, checked_mul(k, c.along_meridian)), c.along_meridian};
}

BoundaryInvariant surgery_transform(const BoundaryInvariant& inv, std::int64_t k) {
  const auto c = surgery_transform(homology_class(inv), k);
  return {c.along_parallel, c.along_meridian, inv.period};
}

std::int64_t positivizing_coefficient(const BoundaryInvariant& inv) {
  if (inv.link >= 0) {
    throw Error(ErrorCode::NonNegativeLink,
                "positivizing coefficient requires link < 0, got " + std::to_string(inv.link));
  }
  if (inv.mult > 0) return 0;
  // mult - k·link > 0  <=>  k > mult / link = |mult| / |link|  (mult <= 0, link < 0)
  const std::int64_t a = checked_sub(0, inv.mult);
  const std::int64_t b = checked_sub(0, inv.link);
  return checked_add(a / b, 1);
}

std::string_view to_string(AdmissibilityViolation v) {
  switch (v) {
    case AdmissibilityViolation::ZeroMultiplicity: return "ZeroMultiplicity";
    case AdmissibilityViolation::PositiveLink: return "PositiveLink";
    case AdmissibilityViolation::ZeroLinkOnBirkhoff: return "ZeroLinkOnBirkhoff";
    case AdmissibilityViolation::InvalidPeriod: return "InvalidPeriod";
  }
  return "Unknown";
}

std::optional<AdmissibilityViolation> check_partial_admissible(const BoundaryInvariant& inv,
                                                               bool is_birkhoff) {
  if (inv.mult == 0) return AdmissibilityViolation::ZeroMultiplicity;
  if (inv.period < 1) return AdmissibilityViolation::InvalidPeriod;
  if (inv.link > 0) return AdmissibilityViolation::PositiveLink;
  if (is_birkhoff && inv.link == 0) return AdmissibilityViolation::ZeroLinkOnBirkhoff;
  return std::nullopt;
}

bool is_boundary_class(const TorusHomologyClass& c, bool embedded) {
  if (c.along_parallel == 0) return false;
  if (!embedded) return true;
  return std::gcd(c.along_parallel, c.along_meridian) == 1;
}

}  // namespace aoc
