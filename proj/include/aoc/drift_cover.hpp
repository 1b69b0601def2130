#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aoc/strip_plane.hpp"
#include "aoc/torus_homology.hpp"

namespace aoc {

// The drift homomorphism on the punctured interior of a lifted Birkhoff
// section, represented by the local drift attached to each puncture.

struct Puncture {
  PlanePoint position;
  std::int64_t local_drift = 0;
  std::optional<BoundaryInvariant> invariant;
};

/// Finite set of punctures with pairwise distinct positions and nonzero
/// local drifts. Insertion order is kept; it is the witness tie-break order.
class PuncturedCover {
 public:
  PuncturedCover() = default;
  explicit PuncturedCover(std::vector<Puncture> punctures);

  const std::vector<Puncture>& punctures() const noexcept { return punctures_; }

 private:
  std::vector<Puncture> punctures_;
};

/// Closed polygonal curve; the last vertex connects back to the first.
class PolyCurve {
 public:
  explicit PolyCurve(std::vector<PlanePoint> vertices);

  std::span<const PlanePoint> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const PlanePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  PolyCurve reversed() const;

 private:
  std::vector<PlanePoint> vertices_;
};

/// Loop product of two curves based at the same first vertex.
PolyCurve concatenate(const PolyCurve& first, const PolyCurve& second);

bool on_curve(const PolyCurve& curve, const PlanePoint& point);

/// Exact winding number by signed crossings of the +x ray from `point`,
/// half-open in y. Throws PointOnCurve.
std::int64_t winding_number(const PolyCurve& curve, const PlanePoint& point);

/// Twice the signed area (positive for counter-clockwise curves).
Rational twice_signed_area(const PolyCurve& curve);

/// No two edges meet except consecutive edges at their shared vertex.
bool is_simple(const PolyCurve& curve);

/// Strict interior test for a simple curve (even-odd rule on the +y ray).
bool encloses(const PolyCurve& simple_curve, const PlanePoint& point);

/// Σ winding(curve, puncture)·local_drift. Throws PointOnCurve.
std::int64_t drift(const PolyCurve& curve, const PuncturedCover& cover);

struct LocalDriftCheck {
  std::int64_t drift = 0;          ///< via winding numbers
  std::int64_t enclosed_sum = 0;   ///< Σ local drifts over enclosed punctures
  bool accepted() const { return drift == enclosed_sum; }
};

/// Throws NotSimple, NotCCW, PointOnCurve.
LocalDriftCheck local_drift_sum_check(const PolyCurve& simple_ccw_curve, const PuncturedCover& cover);

/// sign(local_drift) == -sign(mult). Throws MissingInvariant.
bool sign_consistency(const Puncture& puncture);

/// When the curve has negative drift, the first enclosed puncture (insertion
/// order) with negative local drift. Throws NotSimple, NotCCW, MissingInvariant.
std::optional<Puncture> witness_positive_boundary(const PolyCurve& simple_ccw_curve,
                                                  const PuncturedCover& cover);

/// Vertices R(0,0), R(1,0), R(1,1), R(0,1).
struct SuRectangle {
  PlanePoint eta1;
  PlanePoint g_eta1;
  PlanePoint g_eta2;
  PlanePoint eta2;

  friend bool operator==(const SuRectangle& a, const SuRectangle& b) {
    return a.eta1 == b.eta1 && a.g_eta1 == b.g_eta1 && a.g_eta2 == b.g_eta2 && a.eta2 == b.eta2;
  }
};

/// su-rectangle inside a (++) lozenge of the positive strip, using the
/// parametrization u -> u/(1+u) of each half-leaf and the action u -> 2u.
/// Throws WrongModel, WrongLozengeType, PointNotInLozenge.
SuRectangle su_rectangle_from_lozenge(PlaneModel model, const Lozenge& loz, const PlanePoint& eta);

/// Sides alternate between stable (horizontal) and unstable (vertical) leaves
/// lying inside the model.
bool is_su_rectangle(PlaneModel model, const SuRectangle& rect);

PolyCurve boundary_curve(const SuRectangle& rect);

/// Drift of the boundary of the lozenge su-rectangle: -(n1 + n2).
/// Throws InvalidDeckCount unless n1, n2 >= 1.
std::int64_t rectangle_boundary_drift(std::int64_t n1, std::int64_t n2);

}  // namespace aoc
