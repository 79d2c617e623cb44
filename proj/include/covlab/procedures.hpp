#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covlab/rng.hpp"

namespace covlab::procedures {

/// Nominal confidence level 1 - alpha; alpha must lie strictly in (0, 1).
class ConfidenceLevel {
 public:
  explicit ConfidenceLevel(double alpha);
  double alpha() const { return alpha_; }
  double coverage() const { return 1.0 - alpha_; }

  bool operator==(const ConfidenceLevel&) const = default;

 private:
  double alpha_;
};

/// The parameter the intervals aim at: fixed in any one run, known to the
/// simulator, never consulted by the procedures themselves.
class ParameterValue {
 public:
  ParameterValue() = default;
  explicit ParameterValue(double theta);
  double theta() const { return theta_; }

  bool operator==(const ParameterValue&) const = default;

 private:
  double theta_ = 0.0;
};

enum class Family {
  ZKnownSigma,  // mean of n normal observations, known sigma
  Trivial,      // whole line w.p. 1-alpha, empty set otherwise
  UniformPair,  // midpoint of two Uniform(theta +- 1/2) observations, +- c
};

std::string family_name(Family family);

/// A realized confidence set: a bounded interval, the whole line, or the
/// empty set.
class IntervalRealization {
 public:
  enum class Kind { Bounded, WholeLine, Empty };

  static IntervalRealization bounded(double lower, double upper);
  static IntervalRealization whole_line() { return IntervalRealization(Kind::WholeLine); }
  static IntervalRealization empty_set() { return IntervalRealization(Kind::Empty); }

  Kind kind() const { return kind_; }
  bool is_bounded() const { return kind_ == Kind::Bounded; }
  double lower() const;  // ContractError unless bounded
  double upper() const;

  /// WholeLine covers everything, Empty covers nothing, Bounded covers theta
  /// iff lower <= theta <= upper.
  bool covers(double theta) const;

  bool operator==(const IntervalRealization&) const = default;

 private:
  explicit IntervalRealization(Kind kind) : kind_(kind) {}
  Kind kind_;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

/// Data drawn for one run of a procedure. Carries the family tag so that an
/// interval is never built from a sample drawn for a different procedure.
struct Sample {
  Family family;
  std::vector<double> values;
};

/// Validated description of a confidence procedure. All parameter checking
/// happens here, at construction; draw/build never re-validate.
class ProcedureSpec {
 public:
  static ProcedureSpec z_known_sigma(ConfidenceLevel level, double sigma, int n_obs);
  static ProcedureSpec trivial(ConfidenceLevel level);
  static ProcedureSpec uniform_pair(ConfidenceLevel level, double half_width);
  /// Uniform pair with half-width calibrated so the design coverage
  /// 4c(1-c) equals 1 - alpha: c = (1 - sqrt(alpha)) / 2.
  static ProcedureSpec uniform_pair_calibrated(ConfidenceLevel level);

  Family family() const { return family_; }
  ConfidenceLevel level() const { return level_; }
  double sigma() const;      // ZKnownSigma only
  int n_obs() const;         // ZKnownSigma only
  double half_width() const; // UniformPair only

  /// How many values draw_sample produces (Trivial draws one randomizer).
  std::size_t sample_size() const;

  std::string describe() const;

  bool operator==(const ProcedureSpec&) const = default;

 private:
  ProcedureSpec(Family family, ConfidenceLevel level) : family_(family), level_(level) {}
  Family family_;
  ConfidenceLevel level_;
  double sigma_ = 0.0;
  int n_obs_ = 0;
  double half_width_ = 0.0;
};

/// Draws one sample for the procedure at the given parameter value.
///   ZKnownSigma: n i.i.d. Normal(theta, sigma^2) via inverse-CDF sampling.
///   UniformPair: two i.i.d. Uniform(theta - 1/2, theta + 1/2).
///   Trivial:     one Uniform(0, 1) randomizer.
Sample draw_sample(const ProcedureSpec& spec, ParameterValue theta, TrialRng& rng);

/// Maps a sample to its realized confidence set. ContractError if the sample
/// was drawn for a different family or has the wrong length.
IntervalRealization build_interval(const ProcedureSpec& spec, const Sample& sample);

/// 1 if the interval covers theta, else 0.
int coverage_indicator(const IntervalRealization& interval, ParameterValue theta);

/// Exact design-level coverage: 1 - alpha for ZKnownSigma and Trivial,
/// 4c(1-c) for UniformPair.
double analytic_coverage(const ProcedureSpec& spec);

/// Coverage probability of the uniform-pair interval given the ancillary
/// range r = |x1 - x2|: min(1, 2c / (1 - r)). The range is ancillary (its
/// law does not involve theta), so this conditional is computable from the
/// realized data alone.
/// ContractError unless the spec is UniformPair with a two-value sample;
/// SupportError if r >= 1 (impossible under the model).
double conditional_coverage_given_range(const ProcedureSpec& spec, const Sample& sample);

}  // namespace covlab::procedures
