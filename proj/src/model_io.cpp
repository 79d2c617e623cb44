#include "covlab/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "covlab/errors.hpp"

namespace covlab::exact {

namespace {

struct PendingCpt {
  std::string variable;
  std::vector<std::string> parents;
  // Keyed by parent-state combination (in parent order) to detect duplicates.
  std::map<std::vector<std::string>, std::vector<Rational>> rows;
  int header_line = 0;
};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("model schema, line " + std::to_string(line) + ": " + message);
}

std::size_t row_count_for(const DiscreteModel& model, const std::vector<std::string>& parents) {
  std::size_t n = 1;
  for (const auto& p : parents) {
    n *= model.variable(model.variable_index(p)).states.size();
  }
  return n;
}

void flush_cpt(DiscreteModel& model, PendingCpt& cpt) {
  const std::size_t expected = row_count_for(model, cpt.parents);
  if (cpt.rows.size() != expected) {
    fail(cpt.header_line, "cpt " + cpt.variable + " has " + std::to_string(cpt.rows.size()) +
                              " rows, expected " + std::to_string(expected));
  }
  // Rebuild in row-major order (first parent slowest), the order set_cpt expects.
  std::vector<std::size_t> parent_ids;
  for (const auto& p : cpt.parents) parent_ids.push_back(model.variable_index(p));
  std::vector<std::vector<Rational>> ordered;
  ordered.reserve(expected);
  std::vector<std::size_t> combo(parent_ids.size(), 0);
  for (std::size_t k = 0; k < expected; ++k) {
    std::vector<std::string> key;
    for (std::size_t i = 0; i < parent_ids.size(); ++i) {
      key.push_back(model.variable(parent_ids[i]).states[combo[i]]);
    }
    const auto it = cpt.rows.find(key);
    if (it == cpt.rows.end()) {
      std::string combo_text;
      for (const auto& s : key) combo_text += ' ' + s;
      fail(cpt.header_line, "cpt " + cpt.variable + " is missing row" + combo_text);
    }
    ordered.push_back(it->second);
    for (std::size_t i = parent_ids.size(); i-- > 0;) {
      if (++combo[i] < model.variable(parent_ids[i]).states.size()) break;
      combo[i] = 0;
    }
  }
  model.set_cpt(cpt.variable, cpt.parents, std::move(ordered));
}

}  // namespace

DiscreteModel parse_model(std::string_view text) {
  DiscreteModel model;
  std::optional<PendingCpt> current;

  std::istringstream input{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(input, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;

    const std::string& keyword = tokens.front();
    if (keyword == "var") {
      if (current) {
        flush_cpt(model, *current);
        current.reset();
      }
      if (tokens.size() < 3) fail(line_no, "var needs a name and at least one state");
      try {
        model.add_variable(tokens[1], {tokens.begin() + 2, tokens.end()});
      } catch (const ContractError& e) {
        fail(line_no, e.what());
      }
    } else if (keyword == "cpt") {
      if (current) {
        flush_cpt(model, *current);
        current.reset();
      }
      if (tokens.size() < 2) fail(line_no, "cpt needs a variable name");
      PendingCpt cpt;
      cpt.variable = tokens[1];
      cpt.header_line = line_no;
      if (tokens.size() > 2) {
        if (tokens[2] != "|") fail(line_no, "expected '|' before parent list");
        if (tokens.size() == 3) fail(line_no, "empty parent list after '|'");
        cpt.parents.assign(tokens.begin() + 3, tokens.end());
      }
      try {
        model.variable_index(cpt.variable);
        for (const auto& p : cpt.parents) model.variable_index(p);
      } catch (const QueryError& e) {
        fail(line_no, e.what());
      }
      current = std::move(cpt);
    } else if (keyword == "row") {
      if (!current) fail(line_no, "row outside of a cpt block");
      const std::size_t n_parents = current->parents.size();
      // row <parent states...> : <values...>
      if (tokens.size() < n_parents + 2 || tokens[1 + n_parents] != ":") {
        fail(line_no, "expected 'row" + std::string(n_parents ? " <parent states>" : "") +
                          " : <values>'");
      }
      std::vector<std::string> key(tokens.begin() + 1, tokens.begin() + 1 + n_parents);
      for (std::size_t i = 0; i < n_parents; ++i) {
        const std::size_t pid = model.variable_index(current->parents[i]);
        try {
          model.state_index(pid, key[i]);
        } catch (const QueryError& e) {
          fail(line_no, e.what());
        }
      }
      std::vector<Rational> values;
      for (auto it = tokens.begin() + 2 + n_parents; it != tokens.end(); ++it) {
        try {
          values.push_back(Rational::parse(*it));
        } catch (const ParseError& e) {
          fail(line_no, e.what());
        }
      }
      const auto& var = model.variable(model.variable_index(current->variable));
      if (values.size() != var.states.size()) {
        fail(line_no, "row needs " + std::to_string(var.states.size()) + " values, got " +
                          std::to_string(values.size()));
      }
      if (!current->rows.emplace(std::move(key), std::move(values)).second) {
        fail(line_no, "duplicate row for the same parent states");
      }
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (current) flush_cpt(model, *current);

  try {
    model.validate();
  } catch (const ContractError& e) {
    throw ParseError(std::string("model schema: ") + e.what());
  }
  return model;
}

DiscreteModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_model(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace covlab::exact
