#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covlab/discrete_model.hpp"
#include "covlab/rational.hpp"

namespace covlab::exact {

/// Probability of `event` under the full joint distribution, computed by
/// exact enumeration of all joint states consistent with the event.
/// Contradictory events (same variable required in two states) have
/// probability zero. Unknown variables or states raise QueryError.
Rational joint_probability(const DiscreteModel& model, const EventExpr& event);

/// P(target | given) = P(target and given) / P(given), exact.
/// Throws UndefinedConditionalError when P(given) = 0.
Rational conditional_probability(const DiscreteModel& model, const EventExpr& target,
                                 const EventExpr& given);

/// Unconditional probability of `target`; alias of joint_probability kept as
/// a named operation for forward (pre-outcome) queries.
Rational marginal_forward(const DiscreteModel& model, const EventExpr& target);

/// One branch of a fork over a hidden variable: the conditional probability
/// of the target given hidden = state. Branches whose conditioning event has
/// zero probability carry no value (the conditional is undefined there);
/// they are flagged rather than dropped.
struct ForkBranch {
  std::string state;
  std::optional<Rational> probability;

  bool defined() const { return probability.has_value(); }
};

/// Forks P(target) on the realized-but-unobserved value of `hidden`:
/// for each state s, P(target | hidden = s).
std::vector<ForkBranch> degenerate_fork(const DiscreteModel& model, const EventExpr& target,
                                        std::string_view hidden);

/// Recomposes the marginal from the fork: sum over states s of
/// P(hidden = s) * P(target | hidden = s). Exactly equals
/// marginal_forward(model, target); zero-mass branches contribute nothing.
Rational total_probability_recompose(const DiscreteModel& model, const EventExpr& target,
                                     std::string_view hidden);

}  // namespace covlab::exact
