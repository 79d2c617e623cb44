#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covlab/discrete_model.hpp"

namespace covlab::exact {

/// The three bundled example models, built from the same schema text that
/// ships under data/. Names: "flu", "cat", "truffle".
const DiscreteModel& builtin_model(std::string_view name);

/// Schema text of a bundled model (exactly what data/<name>.model contains).
std::string_view builtin_model_text(std::string_view name);

std::vector<std::string> builtin_model_names();

}  // namespace covlab::exact
