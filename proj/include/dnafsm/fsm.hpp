#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dnafsm/alphabet.hpp"
#include "dnafsm/error.hpp"

namespace dnafsm {

struct Transition {
  std::string from;
  std::string symbol;
  std::string to;
};

/// Deterministic finite automaton with a possibly partial transition map.
/// States and symbols keep their declaration order; indices refer to it.
class Fsm {
 public:
  /// Throws argument_error on duplicate names, unknown references or a
  /// second transition for the same (state, symbol).
  Fsm(std::vector<std::string> states, std::string initial, std::vector<std::string> finals,
      std::vector<std::string> symbols, std::vector<Transition> transitions);

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::string& initial() const noexcept { return states_[initial_]; }
  std::size_t initial_index() const noexcept { return initial_; }

  std::optional<std::size_t> find_state(std::string_view name) const;
  std::optional<std::size_t> find_symbol(std::string_view name) const;
  std::size_t state_index(std::string_view name) const;
  std::size_t symbol_index(std::string_view name) const;

  bool is_final(std::size_t state) const { return finals_.at(state); }
  std::optional<std::size_t> next(std::size_t state, std::size_t symbol) const;

  static Fsm from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> states_;
  std::size_t initial_ = 0;
  std::vector<bool> finals_;
  std::vector<std::string> symbols_;
  std::vector<Transition> transitions_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> delta_;
};

/// Type IIS restriction enzyme. Cut distances are counted from the
/// downstream end of the recognition sequence on the top strand; the bottom
/// strand is cut further out, leaving a 5' overhang of cut_bottom - cut_top
/// letters on the downstream fragment.
struct Enzyme {
  std::string name;
  Word recognition;
  std::size_t cut_top = 0;
  std::size_t cut_bottom = 0;

  std::size_t overhang() const noexcept { return cut_bottom - cut_top; }

  static Enzyme make(std::string name, std::string_view recognition, std::size_t cut_top,
                     std::size_t cut_bottom);
  static Enzyme from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

std::vector<Enzyme> parse_enzymes(const nlohmann::json& j);
const Enzyme& find_enzyme(const std::vector<Enzyme>& db, std::string_view name);

/// File loaders; I/O problems raise io_error, content problems argument_error.
nlohmann::json read_json(const std::filesystem::path& path);
Fsm load_fsm(const std::filesystem::path& path);
std::vector<Enzyme> load_enzymes(const std::filesystem::path& path);

}  // namespace dnafsm
