#include "aoc/strip_plane.hpp"

#include <array>

#include "aoc/error.hpp"

namespace aoc {

std::string_view to_string(PlaneModel m) {
  switch (m) {
    case PlaneModel::Trivial: return "trivial";
    case PlaneModel::PositiveStrip: return "positive";
    case PlaneModel::NegativeStrip: return "negative";
  }
  return "unknown";
}

std::string_view to_string(LozengeType t) {
  return t == LozengeType::PlusPlus ? "++" : "+-";
}

std::string_view to_string(FlowNature n) {
  switch (n) {
    case FlowNature::PositivelyTwisted: return "positively-twisted";
    case FlowNature::NegativelyTwisted: return "negatively-twisted";
    case FlowNature::NonTwistedSuspension: return "non-twisted-suspension";
    case FlowNature::Flat: return "flat";
    case FlowNature::Undetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

bool in_strip(PlaneModel model, const Rational& x, const Rational& y) {
  switch (model) {
    case PlaneModel::Trivial: return true;
    case PlaneModel::PositiveStrip: return abs(Rational(x - y)) < 1;
    case PlaneModel::NegativeStrip: return abs(Rational(x + y)) < 1;
  }
  return false;
}

// Both strips are {|cx·x + cy·y| < 1}; each gives two half-plane constraints
// cx·x + cy·y < 1 and -(cx·x + cy·y) < 1.
struct LinearBound {
  int cx;
  int cy;
};

std::array<LinearBound, 2> strip_bounds(PlaneModel model) {
  if (model == PlaneModel::PositiveStrip) return {LinearBound{1, -1}, LinearBound{-1, 1}};
  return {LinearBound{1, 1}, LinearBound{-1, -1}};
}

Rational far_end(const OpenInterval& iv, int coefficient) {
  return coefficient > 0 ? *iv.hi : *iv.lo;
}

Rational near_end(const OpenInterval& iv, int coefficient) {
  return coefficient > 0 ? *iv.lo : *iv.hi;
}

}  // namespace

bool contains(PlaneModel model, const PlanePoint& p) { return in_strip(model, p.x, p.y); }

void require_in_model(PlaneModel model, const PlanePoint& p) {
  if (!contains(model, p)) {
    throw Error(ErrorCode::PointOutsideModel,
                "point (" + format_rational(p.x) + ", " + format_rational(p.y) +
                    ") is outside the " + std::string(to_string(model)) + " model");
  }
}

OpenInterval stable_leaf_extent(PlaneModel model, const PlanePoint& p) {
  switch (model) {
    case PlaneModel::Trivial: return {};
    case PlaneModel::PositiveStrip: return {Rational(p.y - 1), Rational(p.y + 1)};
    case PlaneModel::NegativeStrip: return {Rational(-p.y - 1), Rational(-p.y + 1)};
  }
  return {};
}

OpenInterval unstable_leaf_extent(PlaneModel model, const PlanePoint& p) {
  switch (model) {
    case PlaneModel::Trivial: return {};
    case PlaneModel::PositiveStrip: return {Rational(p.x - 1), Rational(p.x + 1)};
    case PlaneModel::NegativeStrip: return {Rational(-p.x - 1), Rational(-p.x + 1)};
  }
  return {};
}

OpenInterval stable_half_leaf(PlaneModel model, const PlanePoint& p, Sign side) {
  auto leaf = stable_leaf_extent(model, p);
  if (side == Sign::Plus) return {p.x, leaf.hi};
  return {leaf.lo, p.x};
}

OpenInterval unstable_half_leaf(PlaneModel model, const PlanePoint& p, Sign side) {
  auto leaf = unstable_leaf_extent(model, p);
  if (side == Sign::Plus) return {p.y, leaf.hi};
  return {leaf.lo, p.y};
}

std::optional<PlanePoint> leaves_intersect(PlaneModel model, const PlanePoint& p,
                                           const PlanePoint& q) {
  require_in_model(model, p);
  require_in_model(model, q);
  // The strips are convex, so a leaf is the full line clipped to the strip and
  // the candidate lies on both leaves iff it lies in the model.
  PlanePoint candidate{p.x, q.y};
  if (!contains(model, candidate)) return std::nullopt;
  return candidate;
}

QuadrantCompleteness quadrant_complete(PlaneModel model, const PlanePoint& p, Quadrant quadrant) {
  require_in_model(model, p);
  if (model == PlaneModel::Trivial) return {};

  // y = (a, p.y) ranges over the stable half-leaf, z = (p.x, b) over the
  // unstable one; the unstable leaf of y meets the stable leaf of z at (a, b).
  const OpenInterval a_range = stable_half_leaf(model, p, quadrant.stable);
  const OpenInterval b_range = unstable_half_leaf(model, p, quadrant.unstable);

  for (const LinearBound& bound : strip_bounds(model)) {
    const Rational sup = bound.cx * far_end(a_range, bound.cx) + bound.cy * far_end(b_range, bound.cy);
    if (sup <= 1) continue;

    // Walk towards the supremum with t = 1 - 10^-n until the bound fails.
    const Rational a_near = near_end(a_range, bound.cx);
    const Rational a_far = far_end(a_range, bound.cx);
    const Rational b_near = near_end(b_range, bound.cy);
    const Rational b_far = far_end(b_range, bound.cy);
    Rational gap(1, 10);
    for (;;) {
      const Rational t = 1 - gap;
      const Rational a = a_near + t * (a_far - a_near);
      const Rational b = b_near + t * (b_far - b_near);
      if (bound.cx * a + bound.cy * b >= 1) {
        return {false, std::make_pair(PlanePoint{a, p.y}, PlanePoint{p.x, b})};
      }
      gap /= 10;
    }
  }
  return {};
}

OpenRectangle quadrant_set(PlaneModel model, const PlanePoint& p, Quadrant quadrant) {
  require_in_model(model, p);
  return {stable_half_leaf(model, p, quadrant.stable), unstable_half_leaf(model, p, quadrant.unstable)};
}

std::optional<Lozenge> lozenge_in_quadrant(PlaneModel model, const PlanePoint& p, Quadrant quadrant) {
  const OpenRectangle region = quadrant_set(model, p, quadrant);
  if (!region.x.bounded() || !region.y.bounded()) return std::nullopt;

  // The opposite corner sits at the far ends of both half-leaves.
  PlanePoint other{quadrant.stable == Sign::Plus ? *region.x.hi : *region.x.lo,
                   quadrant.unstable == Sign::Plus ? *region.y.hi : *region.y.lo};
  if (!contains(model, other)) return std::nullopt;

  const Quadrant back{opposite(quadrant.stable), opposite(quadrant.unstable)};
  if (quadrant_set(model, other, back) != region) return std::nullopt;

  const LozengeType type =
      quadrant.stable == quadrant.unstable ? LozengeType::PlusPlus : LozengeType::PlusMinus;
  if (quadrant.stable == Sign::Plus) return Lozenge{p, other, type};
  return Lozenge{other, p, type};
}

std::optional<Lozenge> lozenge_at(PlaneModel model, const PlanePoint& p, LozengeType type) {
  const Quadrant quadrant{Sign::Plus, type == LozengeType::PlusPlus ? Sign::Plus : Sign::Minus};
  return lozenge_in_quadrant(model, p, quadrant);
}

OpenRectangle lozenge_region(PlaneModel model, const Lozenge& loz) {
  const Quadrant quadrant{Sign::Plus, loz.type == LozengeType::PlusPlus ? Sign::Plus : Sign::Minus};
  return quadrant_set(model, loz.corner1, quadrant);
}

bool in_lozenge(PlaneModel model, const Lozenge& loz, const PlanePoint& p) {
  const OpenRectangle region = lozenge_region(model, loz);
  return region.x.contains(p.x) && region.y.contains(p.y) && contains(model, p);
}

FlowNature classify_model(PlaneModel model) {
  const PlanePoint origin{0, 0};
  const bool has_plus_plus = lozenge_at(model, origin, LozengeType::PlusPlus).has_value();
  const bool has_plus_minus = lozenge_at(model, origin, LozengeType::PlusMinus).has_value();
  if (has_plus_plus && has_plus_minus) {
    throw Error(ErrorCode::InvalidArgument, "model admits lozenges of both types");
  }
  if (has_plus_plus) return FlowNature::PositivelyTwisted;
  if (has_plus_minus) return FlowNature::NegativelyTwisted;
  return FlowNature::NonTwistedSuspension;
}

}  // namespace aoc
