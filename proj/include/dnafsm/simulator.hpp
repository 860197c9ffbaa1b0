#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnafsm/encoding.hpp"

namespace dnafsm {

/// Downstream fragment of the tape. Only the top strand is stored; the
/// bottom strand pairs letter-wise with every top letter except the first
/// `overhang`, which are single-stranded.
struct TapeState {
  std::string top;
  std::size_t overhang = 0;
  std::size_t consumed_symbols = 0;

  std::string exposed() const { return top.substr(0, overhang); }
};

/// Splits a symbol string. With a comma or blank present the input is split
/// on those; otherwise every character is one symbol. Throws argument_error
/// on a name the automaton does not know.
std::vector<std::size_t> parse_input(const Fsm& fsm, std::string_view text);

/// recognition . spacer . codewords of input . terminator . tail, blunt.
TapeState build_tape(const EncodingPlan& plan, const std::vector<std::size_t>& input);

/// Cuts a blunt tape. Throws molecule_error unless the site sits at the front
/// and nowhere else.
TapeState initial_cut(TapeState tape, const Enzyme& enzyme);

/// Hybridizes the molecule's overhang to the exposed letters and seals the
/// junction. Throws molecule_error naming the first mismatching position.
TapeState ligate(TapeState tape, const TransitionMolecule& m);

/// Cuts after a ligation. Throws molecule_error when the site is missing,
/// duplicated, or the tape is too short.
TapeState cut(TapeState tape, const Enzyme& enzyme);

struct TraceStep {
  std::size_t index = 0;  // 1-based
  std::string exposed;
  std::size_t state = 0;
  std::optional<std::size_t> symbol;  // empty on the terminator
  std::optional<TransitionMolecule> molecule;
  std::size_t letters_consumed = 0;
};

enum class Outcome { halted_on_terminator, stuck_undefined_transition, error };

std::string_view to_string(Outcome outcome);

struct RunResult {
  std::vector<TraceStep> trace;
  std::optional<std::size_t> final_state;
  bool accepted = false;
  Outcome outcome = Outcome::error;
  std::string error;
  std::size_t cuts = 0;
  std::size_t ligations = 0;
};

/// Cut, decode, ligate, cut until the terminator shows up or no molecule
/// matches. Molecule-level failures end the run with Outcome::error and the
/// partial trace.
RunResult run(const EncodingPlan& plan, const std::vector<std::size_t>& input);

std::string format_step(const EncodingPlan& plan, const TraceStep& step);
std::string format_result(const EncodingPlan& plan, const RunResult& result);

/// Direct iteration of the transition map.
struct ExecResult {
  std::size_t state = 0;  // where the run ended or got stuck
  bool accepted = false;
  bool stuck = false;
};

ExecResult fsm_execute(const Fsm& fsm, const std::vector<std::size_t>& input);

}  // namespace dnafsm
