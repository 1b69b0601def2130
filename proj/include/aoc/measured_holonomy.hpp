#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aoc/rational.hpp"

namespace aoc {

struct SingularityData {
  std::int64_t mult = 1;
  std::int64_t link = -1;
  std::int64_t period = 1;
};

/// Singularities of the measured foliation, keyed by identifier, plus an
/// optional rational evaluation point for the dilation rate λ.
struct FoliationModel {
  std::map<std::string, SingularityData> singularities;
  std::optional<Rational> lambda_hint;

  /// Throws InvalidArgument on link >= 0, mult == 0, period < 1 or λ <= 1.
  void validate() const;
  /// Throws UnknownSingularity.
  const SingularityData& singularity(const std::string& id) const;
};

/// Formal sum Σ c_e·λ^e with rational c_e > 0 (zero terms are dropped).
/// Every λ > 1 verdict is decided from exponents and coefficient signs.
class LambdaLength {
 public:
  LambdaLength() = default;

  static LambdaLength unit() { return monomial(1, 0); }
  static LambdaLength monomial(const Rational& coeff, std::int64_t exponent);

  /// Adds c·λ^e; throws InvalidArgument on a negative coefficient.
  void add_term(std::int64_t exponent, const Rational& coeff);

  const std::map<std::int64_t, Rational>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Σ c_e (the value at λ = 1).
  Rational mass() const;
  std::optional<std::int64_t> max_exponent() const;
  std::optional<std::int64_t> min_exponent() const;

  LambdaLength shifted(std::int64_t k) const;
  LambdaLength scaled(const Rational& factor) const;
  LambdaLength operator+(const LambdaLength& other) const;
  /// Formal product; used to compose per-crossing factors.
  LambdaLength operator*(const LambdaLength& other) const;

  Rational evaluate(const Rational& lambda) const;

  friend bool operator==(const LambdaLength&, const LambdaLength&) = default;

 private:
  std::map<std::int64_t, Rational> terms_;
};

enum class CrossingSide { SingularOnRight, SingularOnLeft };

struct CrossingEvent {
  std::string singularity;
  CrossingSide side = CrossingSide::SingularOnRight;
  /// Fraction of the pushed stable segment lying beyond the singular prong.
  Rational split = 1;
  /// Unstable-measure coordinate along the segment.
  Rational u_position = 0;
};

/// -mult·period when the singularity is on the right, +mult·period on the left.
std::int64_t crossing_exponent(const SingularityData& s, CrossingSide side);

/// Scaling polynomial (1 - split) + split·λ^k of one crossing.
LambdaLength crossing_factor(const CrossingEvent& ev, const FoliationModel& model);

/// Throws UnknownSingularity, InvalidArgument (split outside [0,1]).
LambdaLength apply_crossing(const LambdaLength& len, const CrossingEvent& ev, const FoliationModel& model);

struct GeneralizedHolonomy {
  enum class Status { Defined, BlowUp };

  Status status = Status::Defined;
  /// Image of the input length under the finite events.
  LambdaLength length;
  /// Per-period factor of the periodic tail, when one was supplied.
  std::optional<LambdaLength> period_factor;

  bool defined() const { return status == Status::Defined; }
};

/// Folds the finite crossings, then decides blow-up of an optional periodic
/// tail: the holonomy is undefined iff the per-period factor carries positive
/// mass at a positive exponent. Throws NonIncreasingUPositions.
GeneralizedHolonomy generalized_holonomy(const LambdaLength& len, std::span<const CrossingEvent> events,
                                         std::optional<std::span<const CrossingEvent>> periodic_tail,
                                         const FoliationModel& model);

struct ContractionCertificate {
  std::vector<std::int64_t> exponents;  ///< one per event, all <= 0
  LambdaLength composed;                ///< image of the unit length
  bool accepted = false;
};

/// Certifies that right-side crossings at positive-multiplicity singularities
/// never increase stable-measure length. Throws PreconditionViolated naming the first
/// offending event.
ContractionCertificate positive_side_contraction(const FoliationModel& model,
                                                 std::span<const CrossingEvent> events);

struct SpacingViolation {
  std::size_t first;
  std::size_t second;
};

/// Checks that events whose evaluated lengths are both <= ell sit more than
/// delta apart in unstable measure. Throws LengthMismatch, MissingLambdaHint.
std::optional<SpacingViolation> validate_event_spacing(std::span<const CrossingEvent> events,
                                                       std::span<const LambdaLength> lengths_at_events,
                                                       const Rational& ell, const Rational& delta,
                                                       const FoliationModel& model);

}  // namespace aoc
