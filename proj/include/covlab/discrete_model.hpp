#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covlab/rational.hpp"

namespace covlab::exact {

struct Variable {
  std::string name;
  std::vector<std::string> states;

  bool operator==(const Variable&) const = default;
};

/// Conjunction of (variable = state) atoms. An empty expression is the sure
/// event. The same variable may appear twice; if the states differ the event
/// is contradictory and has probability zero.
class EventExpr {
 public:
  EventExpr() = default;
  EventExpr(std::initializer_list<std::pair<std::string, std::string>> atoms);

  EventExpr& require(std::string variable, std::string state);

  const std::vector<std::pair<std::string, std::string>>& atoms() const { return atoms_; }
  bool is_sure() const { return atoms_.empty(); }

  /// Conjunction of two events.
  friend EventExpr operator&&(EventExpr lhs, const EventExpr& rhs);

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> atoms_;
};

/// Finite DAG of categorical variables with one conditional probability
/// table per variable. All probabilities are exact rationals.
///
/// CPT rows are indexed row-major over the parent state combinations, with
/// the first listed parent varying slowest. Row k holds one probability per
/// state of the child, in the child's declared state order.
class DiscreteModel {
 public:
  void add_variable(std::string name, std::vector<std::string> states);
  void set_cpt(std::string_view variable, std::vector<std::string> parents,
               std::vector<std::vector<Rational>> rows);

  /// Checks the full invariant set: every variable has a CPT, every row sums
  /// to exactly 1, every entry is in [0, 1], and parent references admit a
  /// topological order. Throws ContractError on violation.
  void validate() const;

  std::size_t variable_count() const { return variables_.size(); }
  const Variable& variable(std::size_t index) const { return variables_[index]; }

  /// Index of a declared variable; throws QueryError if unknown.
  std::size_t variable_index(std::string_view name) const;
  /// Index of a declared state of variable `v`; throws QueryError if unknown.
  std::size_t state_index(std::size_t v, std::string_view state) const;

  const std::vector<std::size_t>& parents_of(std::size_t v) const { return parents_[v]; }
  const std::vector<std::vector<Rational>>& cpt_rows(std::size_t v) const { return rows_[v]; }

  /// P(variable v takes assignment[v] | parents take their assignment states).
  const Rational& cpt_entry(std::size_t v, std::span<const std::size_t> assignment) const;

  bool operator==(const DiscreteModel&) const = default;

 private:
  std::size_t row_index(std::size_t v, std::span<const std::size_t> assignment) const;

  std::vector<Variable> variables_;
  std::vector<std::vector<std::size_t>> parents_;        // per variable
  std::vector<std::vector<std::vector<Rational>>> rows_; // per variable: row x state
  std::vector<bool> has_cpt_;
};

}  // namespace covlab::exact
