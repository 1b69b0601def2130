#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "aoc/rational.hpp"

namespace aoc {

// Model bifoliated planes of R-covered Anosov flows. The stable foliation is
// horizontal (y = const) and the unstable foliation vertical (x = const);
// the strips are open, so points on their boundary lines are rejected.
enum class PlaneModel { Trivial, PositiveStrip, NegativeStrip };

struct PlanePoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Half-leaf selector: one sign for the stable half-leaf, one for the unstable.
struct Quadrant {
  Sign stable = Sign::Plus;
  Sign unstable = Sign::Plus;

  friend bool operator==(const Quadrant&, const Quadrant&) = default;
};

enum class LozengeType { PlusPlus, PlusMinus };

/// corner1 is always the corner whose lozenge quadrant is (+,+) or (+,-);
/// corner2 sees it through (-,-) or (-,+) respectively.
struct Lozenge {
  PlanePoint corner1;
  PlanePoint corner2;
  LozengeType type = LozengeType::PlusPlus;

  friend bool operator==(const Lozenge& a, const Lozenge& b) {
    return a.corner1 == b.corner1 && a.corner2 == b.corner2 && a.type == b.type;
  }
};

enum class FlowNature {
  PositivelyTwisted,
  NegativelyTwisted,
  NonTwistedSuspension,
  Flat,
  Undetermined,
};

std::string_view to_string(PlaneModel m);
std::string_view to_string(LozengeType t);
std::string_view to_string(FlowNature n);

/// Open interval with optional (infinite when absent) endpoints.
struct OpenInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& v) const {
    return (!lo || *lo < v) && (!hi || v < *hi);
  }
  bool bounded() const { return lo.has_value() && hi.has_value(); }

  friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Open axis-parallel rectangle; the sets it describes are always further
/// intersected with the model's strip.
struct OpenRectangle {
  OpenInterval x;
  OpenInterval y;

  friend bool operator==(const OpenRectangle&, const OpenRectangle&) = default;
};

bool contains(PlaneModel model, const PlanePoint& p);

/// Throws PointOutsideModel.
void require_in_model(PlaneModel model, const PlanePoint& p);

/// x-extent of the stable (horizontal) leaf through p.
OpenInterval stable_leaf_extent(PlaneModel model, const PlanePoint& p);
/// y-extent of the unstable (vertical) leaf through p.
OpenInterval unstable_leaf_extent(PlaneModel model, const PlanePoint& p);

OpenInterval stable_half_leaf(PlaneModel model, const PlanePoint& p, Sign side);
OpenInterval unstable_half_leaf(PlaneModel model, const PlanePoint& p, Sign side);

/// Unstable leaf of p meets the stable leaf of q at (p.x, q.y), when that
/// point lies in the model.
std::optional<PlanePoint> leaves_intersect(PlaneModel model, const PlanePoint& p,
                                           const PlanePoint& q);

struct QuadrantCompleteness {
  bool complete = true;
  /// When incomplete: a point on the stable half-leaf and one on the unstable
  /// half-leaf whose unstable/stable leaves miss each other.
  std::optional<std::pair<PlanePoint, PlanePoint>> witness;
};

QuadrantCompleteness quadrant_complete(PlaneModel model, const PlanePoint& p, Quadrant quadrant);

/// Product of the selected half-leaves of p as an open rectangle (to be read
/// intersected with the model).
OpenRectangle quadrant_set(PlaneModel model, const PlanePoint& p, Quadrant quadrant);

/// The lozenge having p as a corner and occupying the given quadrant of p.
std::optional<Lozenge> lozenge_in_quadrant(PlaneModel model, const PlanePoint& p, Quadrant quadrant);

/// Lozenge of the requested type with p as its first corner.
std::optional<Lozenge> lozenge_at(PlaneModel model, const PlanePoint& p, LozengeType type);

/// Open region of the lozenge spanned by the half-leaves of corner1.
OpenRectangle lozenge_region(PlaneModel model, const Lozenge& loz);
bool in_lozenge(PlaneModel model, const Lozenge& loz, const PlanePoint& p);

/// Nature of the flow whose orbit space is `model`, read off from the
/// lozenge types the model admits.
FlowNature classify_model(PlaneModel model);

}  // namespace aoc
