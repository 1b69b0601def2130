#include "aoc/measured_holonomy.hpp"

#include "aoc/error.hpp"

namespace aoc {

void FoliationModel::validate() const {
  for (const auto& [id, s] : singularities) {
    if (s.mult == 0) throw Error(ErrorCode::InvalidArgument, "singularity " + id + ": zero multiplicity");
    if (s.link >= 0) throw Error(ErrorCode::InvalidArgument, "singularity " + id + ": link must be < 0");
    if (s.period < 1) throw Error(ErrorCode::InvalidArgument, "singularity " + id + ": period must be >= 1");
  }
  if (lambda_hint && *lambda_hint <= 1) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be > 1");
  }
}

const SingularityData& FoliationModel::singularity(const std::string& id) const {
  auto it = singularities.find(id);
  if (it == singularities.end()) {
    throw Error(ErrorCode::UnknownSingularity, "unknown singularity '" + id + "'");
  }
  return it->second;
}

LambdaLength LambdaLength::monomial(const Rational& coeff, std::int64_t exponent) {
  LambdaLength out;
  out.add_term(exponent, coeff);
  return out;
}

void LambdaLength::add_term(std::int64_t exponent, const Rational& coeff) {
  if (coeff < 0) throw Error(ErrorCode::InvalidArgument, "λ-length coefficients must be >= 0");
  if (coeff == 0) return;
  terms_[exponent] += coeff;
}

Rational LambdaLength::mass() const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::optional<std::int64_t> LambdaLength::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<std::int64_t> LambdaLength::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

LambdaLength LambdaLength::shifted(std::int64_t k) const {
  LambdaLength out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked_add(e, k), c);
  return out;
}

LambdaLength LambdaLength::scaled(const Rational& factor) const {
  LambdaLength out;
  for (const auto& [e, c] : terms_) out.add_term(e, factor * c);
  return out;
}

LambdaLength LambdaLength::operator+(const LambdaLength& other) const {
  LambdaLength out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

LambdaLength LambdaLength::operator*(const LambdaLength& other) const {
  LambdaLength out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(checked_add(e1, e2), c1 * c2);
  }
  return out;
}

Rational LambdaLength::evaluate(const Rational& lambda) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c * power(lambda, e);
  return total;
}

std::int64_t crossing_exponent(const SingularityData& s, CrossingSide side) {
  const std::int64_t magnitude = checked_mul(s.mult, s.period);
  return side == CrossingSide::SingularOnRight ? -magnitude : magnitude;
}

LambdaLength crossing_factor(const CrossingEvent& ev, const FoliationModel& model) {
  if (ev.split < 0 || ev.split > 1) {
    throw Error(ErrorCode::InvalidArgument, "split must lie in [0,1], got " + format_rational(ev.split));
  }
  const std::int64_t k = crossing_exponent(model.singularity(ev.singularity), ev.side);
  // Identity on the part that stays on the regular prong, λ^k-affine on the rest.
  LambdaLength factor = LambdaLength::monomial(1 - ev.split, 0);
  factor.add_term(k, ev.split);
  return factor;
}

LambdaLength apply_crossing(const LambdaLength& len, const CrossingEvent& ev, const FoliationModel& model) {
  return len * crossing_factor(ev, model);
}

namespace {

void require_increasing(std::span<const CrossingEvent> events,
                        std::optional<std::span<const CrossingEvent>> tail) {
  const Rational* previous = nullptr;
  std::size_t index = 0;
  const auto check = [&](const CrossingEvent& ev) {
    if (previous && !(*previous < ev.u_position)) {
      throw Error(ErrorCode::NonIncreasingUPositions,
                  "u_position of event " + std::to_string(index) + " does not increase");
    }
    previous = &ev.u_position;
    ++index;
  };
  for (const auto& ev : events) check(ev);
  if (tail) {
    for (const auto& ev : *tail) check(ev);
  }
}

}  // namespace

GeneralizedHolonomy generalized_holonomy(const LambdaLength& len, std::span<const CrossingEvent> events,
                                         std::optional<std::span<const CrossingEvent>> periodic_tail,
                                         const FoliationModel& model) {
  require_increasing(events, periodic_tail);

  GeneralizedHolonomy result;
  result.length = len;
  for (const auto& ev : events) result.length = apply_crossing(result.length, ev, model);

  if (periodic_tail) {
    LambdaLength factor = LambdaLength::unit();
    for (const auto& ev : *periodic_tail) factor = apply_crossing(factor, ev, model);
    const auto top = factor.max_exponent();
    if (top && *top > 0) result.status = GeneralizedHolonomy::Status::BlowUp;
    result.period_factor = std::move(factor);
  }
  return result;
}

ContractionCertificate positive_side_contraction(const FoliationModel& model,
                                                 std::span<const CrossingEvent> events) {
  ContractionCertificate cert;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const CrossingEvent& ev = events[i];
    const SingularityData* s = nullptr;
    try {
      s = &model.singularity(ev.singularity);
    } catch (const Error&) {
      throw Error(ErrorCode::PreconditionViolated,
                  "event " + std::to_string(i) + ": unknown singularity '" + ev.singularity + "'");
    }
    if (ev.side != CrossingSide::SingularOnRight) {
      throw Error(ErrorCode::PreconditionViolated,
                  "event " + std::to_string(i) + ": singularity is not on the right");
    }
    if (s->mult <= 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "event " + std::to_string(i) + ": singularity '" + ev.singularity +
                      "' has non-positive multiplicity");
    }
    cert.exponents.push_back(crossing_exponent(*s, ev.side));
  }

  cert.composed = LambdaLength::unit();
  for (const auto& ev : events) cert.composed = apply_crossing(cert.composed, ev, model);

  // Mass is conserved and every term sits at exponent <= 0, so the value at
  // any λ > 1 is at most the input's.
  bool shifts_nonpositive = true;
  for (std::int64_t k : cert.exponents) shifts_nonpositive = shifts_nonpositive && k <= 0;
  const auto top = cert.composed.max_exponent();
  cert.accepted = shifts_nonpositive && cert.composed.mass() == 1 && (!top || *top <= 0);
  return cert;
}

std::optional<SpacingViolation> validate_event_spacing(std::span<const CrossingEvent> events,
                                                       std::span<const LambdaLength> lengths_at_events,
                                                       const Rational& ell, const Rational& delta,
                                                       const FoliationModel& model) {
  if (events.size() != lengths_at_events.size()) {
    throw Error(ErrorCode::LengthMismatch, "events and lengths differ in size");
  }
  if (!model.lambda_hint) {
    throw Error(ErrorCode::MissingLambdaHint, "spacing validation needs a numeric λ");
  }
  std::vector<Rational> values;
  values.reserve(lengths_at_events.size());
  for (const auto& len : lengths_at_events) values.push_back(len.evaluate(*model.lambda_hint));

  for (std::size_t i = 0; i < events.size(); ++i) {
    if (values[i] > ell) continue;
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (values[j] > ell) continue;
      if (abs(Rational(events[i].u_position - events[j].u_position)) <= delta) {
        return SpacingViolation{i, j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace aoc
