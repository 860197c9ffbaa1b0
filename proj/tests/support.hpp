#pragma once

#include <filesystem>
#include <string>

#include "dnafsm/encoding.hpp"

namespace dnafsm::testing {

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(DNAFSM_DATA_DIR) / name;
}

inline std::filesystem::path fixture_file(const std::string& name) {
  return std::filesystem::path(DNAFSM_FIXTURE_DIR) / name;
}

inline Enzyme bbvi() { return Enzyme::make("BbvI", "GCAGC", 8, 12); }
inline Enzyme foki() { return Enzyme::make("FokI", "GGATG", 9, 13); }
inline Enzyme syn12() { return Enzyme::make("Syn12", "GAAGAC", 12, 16); }

/// Two-state ends-with-0 machine with the hand-picked codewords ATTGC (0),
/// AGTCA (1) and terminator TCGTG on BbvI. The transition table is
/// reconstructed: from either state, 0 leads to S1 and 1 to S0.
inline EncodingPlan worked_example_plan() {
  Fsm fsm = load_fsm(data_file("ends_with_0.json"));
  auto enc = make_encoding(fsm, 5, 4, {Word("ATTGC"), Word("AGTCA")}, Word("TCGTG"));
  return build_plan(std::move(fsm), bbvi(), std::move(enc));
}

}  // namespace dnafsm::testing
