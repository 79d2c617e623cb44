#include "covlab/queries.hpp"

#include <optional>

#include "covlab/errors.hpp"

namespace covlab::exact {

namespace {

// Resolves event atoms into a per-variable forced state. Returns nullopt if
// the event is contradictory.
std::optional<std::vector<std::optional<std::size_t>>> resolve(const DiscreteModel& model,
                                                               const EventExpr& event) {
  std::vector<std::optional<std::size_t>> fixed(model.variable_count());
  for (const auto& [variable, state] : event.atoms()) {
    const std::size_t v = model.variable_index(variable);
    const std::size_t s = model.state_index(v, state);
    if (fixed[v] && *fixed[v] != s) return std::nullopt;
    fixed[v] = s;
  }
  return fixed;
}

}  // namespace

Rational joint_probability(const DiscreteModel& model, const EventExpr& event) {
  const auto fixed = resolve(model, event);
  if (!fixed) return Rational(0);

  const std::size_t n = model.variable_count();
  std::vector<std::size_t> assignment(n, 0);
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n; ++v) {
    if ((*fixed)[v]) {
      assignment[v] = *(*fixed)[v];
    } else {
      free_vars.push_back(v);
    }
  }

  Rational total;
  while (true) {
    Rational term(1);
    for (std::size_t v = 0; v < n; ++v) {
      term *= model.cpt_entry(v, assignment);
      if (term.is_zero()) break;
    }
    total += term;

    // Odometer over the unconstrained variables.
    std::size_t k = 0;
    for (; k < free_vars.size(); ++k) {
      const std::size_t v = free_vars[k];
      if (++assignment[v] < model.variable(v).states.size()) break;
      assignment[v] = 0;
    }
    if (k == free_vars.size()) break;
  }
  return total;
}

Rational conditional_probability(const DiscreteModel& model, const EventExpr& target,
                                 const EventExpr& given) {
  const Rational given_mass = joint_probability(model, given);
  if (given_mass.is_zero()) {
    throw UndefinedConditionalError("conditioning event {" + given.str() + "} has probability zero");
  }
  return joint_probability(model, target && given) / given_mass;
}

Rational marginal_forward(const DiscreteModel& model, const EventExpr& target) {
  return joint_probability(model, target);
}

std::vector<ForkBranch> degenerate_fork(const DiscreteModel& model, const EventExpr& target,
                                        std::string_view hidden) {
  const std::size_t v = model.variable_index(hidden);
  std::vector<ForkBranch> branches;
  branches.reserve(model.variable(v).states.size());
  for (const auto& state : model.variable(v).states) {
    EventExpr given;
    given.require(model.variable(v).name, state);
    const Rational mass = joint_probability(model, given);
    if (mass.is_zero()) {
      branches.push_back({state, std::nullopt});
    } else {
      branches.push_back({state, joint_probability(model, target && given) / mass});
    }
  }
  return branches;
}

Rational total_probability_recompose(const DiscreteModel& model, const EventExpr& target,
                                     std::string_view hidden) {
  const std::size_t v = model.variable_index(hidden);
  Rational total;
  for (const auto& state : model.variable(v).states) {
    EventExpr given;
    given.require(model.variable(v).name, state);
    const Rational mass = joint_probability(model, given);
    if (mass.is_zero()) continue;  // zero-mass branch adds nothing
    const Rational conditional = joint_probability(model, target && given) / mass;
    total += mass * conditional;
  }
  return total;
}

}  // namespace covlab::exact
