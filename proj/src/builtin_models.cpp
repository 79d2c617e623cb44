#include "covlab/builtin_models.hpp"

#include <array>
#include <map>

#include "covlab/errors.hpp"
#include "covlab/model_io.hpp"

namespace covlab::exact {

namespace {

// Kept byte-identical with data/<name>.model; a test enforces the match.
constexpr std::string_view kFluText = R"(# Rapid influenza antigen test, read against true disease status.
# D: true disease status (prevalence 10%).
# T: rapid test result (sensitivity 0.75, specificity 0.98).

var D flu none
var T pos neg

cpt D
row : 0.10 0.90

cpt T | D
row flu : 0.75 0.25
row none : 0.02 0.98
)";

constexpr std::string_view kCatText = R"(# Cat-and-treat chain: flavor -> purring -> after-treat activity.
# F: treat flavor (75% seafood, 25% chicken).
# P: purrs after eating (80% after seafood, 60% after chicken).
# A: what she does next (naps 90% after purring, 50% otherwise).

var F sea chk
var P purr quiet
var A nap roam

cpt F
row : 3/4 1/4

cpt P | F
row sea : 0.8 0.2
row chk : 0.6 0.4

cpt A | P
row purr : 0.9 0.1
row quiet : 0.5 0.5
)";

constexpr std::string_view kTruffleText = R"(# One step of the truffle fabricate-weigh-return loop.
# S: true fill of the truffle now on the belt (filler works 90% of the time).
# W: weigher reading of that truffle (reads filled as hollow 5%, hollow as
#    filled 1%).
# N: fill status of the next truffle the fabricator emits. If W reads
#    filled, the next truffle is a fresh shell (filled w.p. 0.9). If W reads
#    hollow, the current truffle comes back for a refill pass: an already
#    filled one stays filled, a hollow one gets ganache w.p. 0.9.

var S filled hollow
var W filled hollow
var N filled hollow

cpt S
row : 0.9 0.1

cpt W | S
row filled : 0.95 0.05
row hollow : 0.01 0.99

cpt N | S W
row filled filled : 0.9 0.1
row filled hollow : 1 0
row hollow filled : 0.9 0.1
row hollow hollow : 0.9 0.1
)";

}  // namespace

std::string_view builtin_model_text(std::string_view name) {
  if (name == "flu") return kFluText;
  if (name == "cat") return kCatText;
  if (name == "truffle") return kTruffleText;
  throw QueryError("unknown builtin model '" + std::string(name) + "'");
}

const DiscreteModel& builtin_model(std::string_view name) {
  static const std::map<std::string, DiscreteModel, std::less<>> models = [] {
    std::map<std::string, DiscreteModel, std::less<>> out;
    for (const auto& n : builtin_model_names()) {
      out.emplace(n, parse_model(builtin_model_text(n)));
    }
    return out;
  }();
  const auto it = models.find(name);
  if (it == models.end()) throw QueryError("unknown builtin model '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> builtin_model_names() { return {"flu", "cat", "truffle"}; }

}  // namespace covlab::exact
