#include "aoc/drift_cover.hpp"

#include <algorithm>
#include <string>

#include "aoc/error.hpp"

namespace aoc {

namespace {

Rational cross(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const PlanePoint& a, const PlanePoint& b, const PlanePoint& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const PlanePoint& p1, const PlanePoint& p2,
                        const PlanePoint& q1, const PlanePoint& q2) {
  const int d1 = sgn(cross(q1, q2, p1));
  const int d2 = sgn(cross(q1, q2, p2));
  const int d3 = sgn(cross(p1, p2, q1));
  const int d4 = sgn(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(q1, q2, p1) || on_segment(q1, q2, p2) ||
         on_segment(p1, p2, q1) || on_segment(p1, p2, q2);
}

std::string describe(const PlanePoint& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

void require_simple_ccw(const PolyCurve& curve) {
  if (!is_simple(curve)) throw Error(ErrorCode::NotSimple, "curve is not simple");
  if (twice_signed_area(curve) <= 0) throw Error(ErrorCode::NotCCW, "curve is not counter-clockwise");
}

void require_off_curve(const PolyCurve& curve, const PlanePoint& point) {
  if (on_curve(curve, point)) {
    throw Error(ErrorCode::PointOnCurve, "point " + describe(point) + " lies on the curve");
  }
}

}  // namespace

PuncturedCover::PuncturedCover(std::vector<Puncture> punctures) : punctures_(std::move(punctures)) {
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    if (punctures_[i].local_drift == 0) {
      throw Error(ErrorCode::InvalidArgument, "puncture " + std::to_string(i) + " has zero local drift");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (punctures_[i].position == punctures_[j].position) {
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate puncture position " + describe(punctures_[i].position));
      }
    }
  }
}

PolyCurve::PolyCurve(std::vector<PlanePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "a closed curve needs at least 3 vertices");
  }
}

PolyCurve PolyCurve::reversed() const {
  std::vector<PlanePoint> out(vertices_.rbegin(), vertices_.rend());
  // keep the base point first
  std::rotate(out.begin(), out.end() - 1, out.end());
  return PolyCurve(std::move(out));
}

PolyCurve concatenate(const PolyCurve& first, const PolyCurve& second) {
  if (!(first.vertex(0) == second.vertex(0))) {
    throw Error(ErrorCode::InvalidArgument, "concatenated loops must share their base point");
  }
  std::vector<PlanePoint> out(first.vertices().begin(), first.vertices().end());
  out.push_back(first.vertex(0));
  out.insert(out.end(), second.vertices().begin() + 1, second.vertices().end());
  return PolyCurve(std::move(out));
}

bool on_curve(const PolyCurve& curve, const PlanePoint& point) {
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (on_segment(curve.vertex(i), curve.vertex(i + 1), point)) return true;
  }
  return false;
}

std::int64_t winding_number(const PolyCurve& curve, const PlanePoint& point) {
  require_off_curve(curve, point);
  std::int64_t winding = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const PlanePoint& a = curve.vertex(i);
    const PlanePoint& b = curve.vertex(i + 1);
    // An edge counts iff exactly one endpoint is strictly above the ray.
    if (a.y <= point.y && b.y > point.y) {
      if (cross(a, b, point) > 0) ++winding;
    } else if (a.y > point.y && b.y <= point.y) {
      if (cross(a, b, point) < 0) --winding;
    }
  }
  return winding;
}

Rational twice_signed_area(const PolyCurve& curve) {
  Rational area = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const PlanePoint& a = curve.vertex(i);
    const PlanePoint& b = curve.vertex(i + 1);
    area += a.x * b.y - b.x * a.y;
  }
  return area;
}

bool is_simple(const PolyCurve& curve) {
  const std::size_t n = curve.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (curve.vertex(i) == curve.vertex(i + 1)) return false;
  }
  // Consecutive edges (a,b), (b,c) may only share b: no fold-back onto each other.
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = curve.vertex(i);
    const PlanePoint& b = curve.vertex(i + 1);
    const PlanePoint& c = curve.vertex(i + 2);
    if (on_segment(a, b, c) || on_segment(b, c, a)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_intersect(curve.vertex(i), curve.vertex(i + 1), curve.vertex(j), curve.vertex(j + 1))) {
        return false;
      }
    }
  }
  return true;
}

bool encloses(const PolyCurve& simple_curve, const PlanePoint& point) {
  require_off_curve(simple_curve, point);
  bool inside = false;
  for (std::size_t i = 0; i < simple_curve.size(); ++i) {
    const PlanePoint& a = simple_curve.vertex(i);
    const PlanePoint& b = simple_curve.vertex(i + 1);
    if ((a.x > point.x) == (b.x > point.x)) continue;
    const Rational y = a.y + (point.x - a.x) * (b.y - a.y) / (b.x - a.x);
    if (y > point.y) inside = !inside;
  }
  return inside;
}

std::int64_t drift(const PolyCurve& curve, const PuncturedCover& cover) {
  std::int64_t total = 0;
  for (const Puncture& p : cover.punctures()) {
    total = checked_add(total, checked_mul(winding_number(curve, p.position), p.local_drift));
  }
  return total;
}

LocalDriftCheck local_drift_sum_check(const PolyCurve& simple_ccw_curve, const PuncturedCover& cover) {
  require_simple_ccw(simple_ccw_curve);
  LocalDriftCheck check;
  check.drift = drift(simple_ccw_curve, cover);
  for (const Puncture& p : cover.punctures()) {
    if (encloses(simple_ccw_curve, p.position)) {
      check.enclosed_sum = checked_add(check.enclosed_sum, p.local_drift);
    }
  }
  return check;
}

bool sign_consistency(const Puncture& puncture) {
  if (!puncture.invariant) {
    throw Error(ErrorCode::MissingInvariant,
                "puncture at " + describe(puncture.position) + " carries no boundary invariant");
  }
  const auto s = [](std::int64_t v) { return (v > 0) - (v < 0); };
  return s(puncture.local_drift) == -s(puncture.invariant->mult);
}

std::optional<Puncture> witness_positive_boundary(const PolyCurve& simple_ccw_curve,
                                                  const PuncturedCover& cover) {
  require_simple_ccw(simple_ccw_curve);
  std::vector<const Puncture*> enclosed;
  for (const Puncture& p : cover.punctures()) {
    if (!encloses(simple_ccw_curve, p.position)) continue;
    if (!p.invariant) {
      throw Error(ErrorCode::MissingInvariant,
                  "enclosed puncture at " + describe(p.position) + " carries no boundary invariant");
    }
    enclosed.push_back(&p);
  }
  if (drift(simple_ccw_curve, cover) >= 0) return std::nullopt;
  for (const Puncture* p : enclosed) {
    if (p->local_drift < 0) return *p;
  }
  // Negative drift is a sum of enclosed local drifts, so one of them is negative.
  throw Error(ErrorCode::InconsistentData, "negative drift without a negative enclosed puncture");
}

SuRectangle su_rectangle_from_lozenge(PlaneModel model, const Lozenge& loz, const PlanePoint& eta) {
  if (model != PlaneModel::PositiveStrip) {
    throw Error(ErrorCode::WrongModel, "su-rectangles are built in the positive strip");
  }
  if (loz.type != LozengeType::PlusPlus) {
    throw Error(ErrorCode::WrongLozengeType, "su-rectangles are built in (++) lozenges");
  }
  require_in_model(model, loz.corner1);
  require_in_model(model, loz.corner2);
  if (!in_lozenge(model, loz, eta)) {
    throw Error(ErrorCode::PointNotInLozenge, "point " + describe(eta) + " is not inside the lozenge");
  }

  const PlanePoint& first = loz.corner1;
  const PlanePoint& second = loz.corner2;
  const Rational width = second.x - first.x;

  // t in (0,1) is the normalized position along a bounded half-leaf; the
  // half-leaf is identified with (0,∞) by u = t/(1-t).
  const auto to_u = [](const Rational& t) { return Rational(t / (1 - t)); };
  const auto to_t = [](const Rational& u) { return Rational(u / (1 + u)); };

  // Foot of the point on the first corner's stable half-leaf, pushed away from
  // that corner by u -> 2u.
  const PlanePoint eta1{eta.x, first.y};
  const Rational t1 = to_t(2 * to_u(Rational((eta1.x - first.x) / width)));
  const PlanePoint g_eta1{first.x + t1 * width, first.y};

  // Foot on the second corner's stable half-leaf, pulled towards that corner
  // by u -> u/2.
  const PlanePoint eta2{eta.x, second.y};
  const Rational t2 = to_t(to_u(Rational((second.x - eta2.x) / width)) / 2);
  const PlanePoint g_eta2{second.x - t2 * width, second.y};

  return {eta1, g_eta1, g_eta2, eta2};
}

bool is_su_rectangle(PlaneModel model, const SuRectangle& rect) {
  const auto on_model = [&](const PlanePoint& a, const PlanePoint& b) {
    // Strips are convex, so a leaf segment lies inside iff its ends do.
    return contains(model, a) && contains(model, b);
  };
  return rect.eta1.y == rect.g_eta1.y && rect.g_eta1.x == rect.g_eta2.x &&
         rect.g_eta2.y == rect.eta2.y && rect.eta2.x == rect.eta1.x &&
         on_model(rect.eta1, rect.g_eta1) && on_model(rect.g_eta1, rect.g_eta2) &&
         on_model(rect.g_eta2, rect.eta2) && on_model(rect.eta2, rect.eta1);
}

PolyCurve boundary_curve(const SuRectangle& rect) {
  return PolyCurve({rect.eta1, rect.g_eta1, rect.g_eta2, rect.eta2});
}

std::int64_t rectangle_boundary_drift(std::int64_t n1, std::int64_t n2) {
  if (n1 < 1 || n2 < 1) {
    throw Error(ErrorCode::InvalidDeckCount, "deck counts must be >= 1");
  }
  return -checked_add(n1, n2);
}

}  // namespace aoc
