#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "covlab/discrete_model.hpp"

namespace covlab::exact {

/// Plain-text model schema
/// -----------------------
/// Line oriented; '#' starts a comment, blank lines are ignored.
///
///   var <name> <state> <state> ...
///       Declares a variable and its state set, in order.
///
///   cpt <name>
///   cpt <name> | <parent> <parent> ...
///       Opens the conditional probability table of <name>. Parents must be
///       declared variables.
///
///   row <parent-state> ... : <p> <p> ...
///       One table row: the parent states identify the conditioning
///       combination (omitted when there are no parents), the values after
///       ':' give one probability per state of <name>, in declared order.
///       Every parent combination needs exactly one row.
///
/// Probabilities are integers ("1"), exact decimal strings ("0.75"), or
/// fractions ("3/4"); they are parsed exactly, never through floating point.
DiscreteModel parse_model(std::string_view text);

/// Reads and parses a model file. Throws IoError if unreadable, ParseError
/// on schema violations.
DiscreteModel load_model(const std::filesystem::path& path);

}  // namespace covlab::exact
