#pragma once

#include <stdexcept>
#include <string>

namespace covlab {

// Malformed query: unknown variable, unknown state, bad event expression.
struct QueryError : std::invalid_argument {
  explicit QueryError(const std::string& what) : std::invalid_argument(what) {}
};

// Conditioning event has probability zero; the conditional does not exist.
struct UndefinedConditionalError : std::domain_error {
  explicit UndefinedConditionalError(const std::string& what) : std::domain_error(what) {}
};

// Caller broke a documented precondition (bad spec parameters, mismatched
// sample, empty input where non-empty is required, ...).
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Value lies outside the support of the model it claims to come from.
struct SupportError : std::domain_error {
  explicit SupportError(const std::string& what) : std::domain_error(what) {}
};

// Text input (numbers, model files, configs) that does not match the schema.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace covlab
