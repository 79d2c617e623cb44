#include "covlab/discrete_model.hpp"

#include <algorithm>
#include <sstream>

#include "covlab/errors.hpp"

namespace covlab::exact {

EventExpr::EventExpr(std::initializer_list<std::pair<std::string, std::string>> atoms) {
  for (const auto& [variable, state] : atoms) require(variable, state);
}

EventExpr& EventExpr::require(std::string variable, std::string state) {
  atoms_.emplace_back(std::move(variable), std::move(state));
  return *this;
}

EventExpr operator&&(EventExpr lhs, const EventExpr& rhs) {
  for (const auto& [variable, state] : rhs.atoms_) lhs.require(variable, state);
  return lhs;
}

std::string EventExpr::str() const {
  if (atoms_.empty()) return "(sure)";
  std::ostringstream os;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) os << ", ";
    os << atoms_[i].first << '=' << atoms_[i].second;
  }
  return os.str();
}

void DiscreteModel::add_variable(std::string name, std::vector<std::string> states) {
  if (name.empty()) throw ContractError("model: variable name must be non-empty");
  if (states.empty()) throw ContractError("model: variable '" + name + "' needs at least one state");
  for (const auto& v : variables_) {
    if (v.name == name) throw ContractError("model: duplicate variable '" + name + "'");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (states[i] == states[j]) {
        throw ContractError("model: duplicate state '" + states[i] + "' of variable '" + name + "'");
      }
    }
  }
  variables_.push_back({std::move(name), std::move(states)});
  parents_.emplace_back();
  rows_.emplace_back();
  has_cpt_.push_back(false);
}

void DiscreteModel::set_cpt(std::string_view variable, std::vector<std::string> parents,
                            std::vector<std::vector<Rational>> rows) {
  const std::size_t v = variable_index(variable);
  std::vector<std::size_t> parent_ids;
  parent_ids.reserve(parents.size());
  std::size_t expected_rows = 1;
  for (const auto& p : parents) {
    const std::size_t pid = variable_index(p);
    if (pid == v) throw ContractError("model: variable '" + std::string(variable) + "' cannot be its own parent");
    if (std::find(parent_ids.begin(), parent_ids.end(), pid) != parent_ids.end()) {
      throw ContractError("model: duplicate parent '" + p + "'");
    }
    parent_ids.push_back(pid);
    expected_rows *= variables_[pid].states.size();
  }
  if (rows.size() != expected_rows) {
    throw ContractError("model: CPT of '" + std::string(variable) + "' needs " +
                        std::to_string(expected_rows) + " rows, got " + std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    if (row.size() != variables_[v].states.size()) {
      throw ContractError("model: CPT row of '" + std::string(variable) + "' needs one entry per state");
    }
  }
  parents_[v] = std::move(parent_ids);
  rows_[v] = std::move(rows);
  has_cpt_[v] = true;
}

void DiscreteModel::validate() const {
  if (variables_.empty()) throw ContractError("model: no variables declared");
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (!has_cpt_[v]) throw ContractError("model: variable '" + variables_[v].name + "' has no CPT");
    for (const auto& row : rows_[v]) {
      Rational sum;
      for (const auto& p : row) {
        if (p < Rational(0) || p > Rational(1)) {
          throw ContractError("model: CPT entry of '" + variables_[v].name + "' outside [0, 1]");
        }
        sum += p;
      }
      if (sum != Rational(1)) {
        throw ContractError("model: CPT row of '" + variables_[v].name + "' sums to " + sum.str() +
                            ", expected 1");
      }
    }
  }
  // Kahn's algorithm; parent edges must admit a topological order.
  std::vector<std::size_t> indegree(variables_.size(), 0);
  for (std::size_t v = 0; v < variables_.size(); ++v) indegree[v] = parents_[v].size();
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t p = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
      if (std::find(parents_[v].begin(), parents_[v].end(), p) != parents_[v].end()) {
        if (--indegree[v] == 0) ready.push_back(v);
      }
    }
  }
  if (seen != variables_.size()) {
    throw ContractError("model: parent references contain a cycle");
  }
}

std::size_t DiscreteModel::variable_index(std::string_view name) const {
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (variables_[v].name == name) return v;
  }
  throw QueryError("unknown variable '" + std::string(name) + "'");
}

std::size_t DiscreteModel::state_index(std::size_t v, std::string_view state) const {
  const auto& states = variables_[v].states;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s] == state) return s;
  }
  throw QueryError("unknown state '" + std::string(state) + "' of variable '" + variables_[v].name + "'");
}

std::size_t DiscreteModel::row_index(std::size_t v, std::span<const std::size_t> assignment) const {
  std::size_t row = 0;
  for (const std::size_t p : parents_[v]) {
    row = row * variables_[p].states.size() + assignment[p];
  }
  return row;
}

const Rational& DiscreteModel::cpt_entry(std::size_t v, std::span<const std::size_t> assignment) const {
  return rows_[v][row_index(v, assignment)][assignment[v]];
}

}  // namespace covlab::exact
