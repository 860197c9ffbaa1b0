#include "dnafsm/fsm.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "dnafsm/error.hpp"

namespace dnafsm {

namespace {

template <class Names>
void require_distinct(const Names& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw argument_error(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw argument_error(std::string("duplicate ") + what + " '" + n + "'");
  }
}

std::optional<std::size_t> index_of(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

Fsm::Fsm(std::vector<std::string> states, std::string initial, std::vector<std::string> finals,
         std::vector<std::string> symbols, std::vector<Transition> transitions)
    : states_(std::move(states)),
      finals_(states_.size(), false),
      symbols_(std::move(symbols)),
      transitions_(std::move(transitions)) {
  if (states_.empty()) throw argument_error("automaton needs at least one state");
  require_distinct(states_, "state");
  require_distinct(symbols_, "symbol");
  initial_ = state_index(initial);
  for (const auto& f : finals) finals_[state_index(f)] = true;
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    const std::size_t from = state_index(t.from);
    const std::size_t sym = symbol_index(t.symbol);
    state_index(t.to);
    if (!delta_.emplace(std::pair{from, sym}, i).second)
      throw argument_error("nondeterministic: two transitions for (" + t.from + ", " + t.symbol + ")");
  }
}

std::optional<std::size_t> Fsm::find_state(std::string_view name) const {
  return index_of(states_, name);
}

std::optional<std::size_t> Fsm::find_symbol(std::string_view name) const {
  return index_of(symbols_, name);
}

std::size_t Fsm::state_index(std::string_view name) const {
  if (auto i = find_state(name)) return *i;
  throw argument_error("unknown state '" + std::string(name) + "'");
}

std::size_t Fsm::symbol_index(std::string_view name) const {
  if (auto i = find_symbol(name)) return *i;
  throw argument_error("unknown symbol '" + std::string(name) + "'");
}

std::optional<std::size_t> Fsm::next(std::size_t state, std::size_t symbol) const {
  auto it = delta_.find({state, symbol});
  if (it == delta_.end()) return std::nullopt;
  return state_index(transitions_[it->second].to);
}

Fsm Fsm::from_json(const nlohmann::json& j) {
  try {
    std::vector<Transition> transitions;
    for (const auto& t : j.at("transitions"))
      transitions.push_back({t.at("from").get<std::string>(), t.at("symbol").get<std::string>(),
                             t.at("to").get<std::string>()});
    return Fsm(j.at("states").get<std::vector<std::string>>(), j.at("initial").get<std::string>(),
               j.value("finals", std::vector<std::string>{}),
               j.at("symbols").get<std::vector<std::string>>(), std::move(transitions));
  } catch (const nlohmann::json::exception& e) {
    throw argument_error(std::string("malformed automaton: ") + e.what());
  }
}

nlohmann::json Fsm::to_json() const {
  nlohmann::json finals = nlohmann::json::array();
  for (std::size_t s = 0; s < states_.size(); ++s)
    if (finals_[s]) finals.push_back(states_[s]);
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : transitions_) ts.push_back({{"from", t.from}, {"symbol", t.symbol}, {"to", t.to}});
  return {{"states", states_}, {"initial", initial()}, {"finals", finals},
          {"symbols", symbols_}, {"transitions", ts}};
}

Enzyme Enzyme::make(std::string name, std::string_view recognition, std::size_t cut_top,
                    std::size_t cut_bottom) {
  if (name.empty()) throw argument_error("enzyme needs a name");
  if (cut_bottom <= cut_top)
    throw argument_error("enzyme " + name + ": bottom cut must lie beyond the top cut (5' overhang)");
  return Enzyme{std::move(name), Word(recognition), cut_top, cut_bottom};
}

Enzyme Enzyme::from_json(const nlohmann::json& j) {
  try {
    return make(j.at("name").get<std::string>(), j.at("recognition").get<std::string>(),
                j.at("cut_top").get<std::size_t>(), j.at("cut_bottom").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw argument_error(std::string("malformed enzyme: ") + e.what());
  }
}

nlohmann::json Enzyme::to_json() const {
  return {{"name", name}, {"recognition", recognition.str()}, {"cut_top", cut_top},
          {"cut_bottom", cut_bottom}};
}

std::vector<Enzyme> parse_enzymes(const nlohmann::json& j) {
  if (!j.is_array()) throw argument_error("enzyme database must be a JSON array");
  std::vector<Enzyme> db;
  for (const auto& e : j) db.push_back(Enzyme::from_json(e));
  std::vector<std::string> names;
  for (const auto& e : db) names.push_back(e.name);
  require_distinct(names, "enzyme");
  return db;
}

const Enzyme& find_enzyme(const std::vector<Enzyme>& db, std::string_view name) {
  for (const auto& e : db)
    if (e.name == name) return e;
  throw argument_error("enzyme '" + std::string(name) + "' not in database");
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw argument_error(path.string() + ": " + e.what());
  }
}

Fsm load_fsm(const std::filesystem::path& path) { return Fsm::from_json(read_json(path)); }

std::vector<Enzyme> load_enzymes(const std::filesystem::path& path) {
  return parse_enzymes(read_json(path));
}

}  // namespace dnafsm
