#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnafsm/alphabet.hpp"
#include "dnafsm/fsm.hpp"

namespace dnafsm {

/// Codeword length p and sticky-end length l for an automaton on an enzyme.
struct Parameters {
  std::size_t p = 0;
  std::size_t l = 0;
};

/// l is the enzyme overhang; p leaves one sticky-end offset per state.
Parameters derive_parameters(const Fsm& fsm, const Enzyme& enzyme);

/// Offsets 0, 1, 2, ... in declaration order, with the initial state moved
/// to the front.
std::vector<std::size_t> default_offsets(const Fsm& fsm);

/// Spacer needed between a transition molecule's recognition site and the
/// exposed sticky end so that the next cut lands on the destination state's
/// offset inside the following codeword:
///   buffer = cut_top - (p - k_from) - k_to.
/// Negative when the enzyme cuts too close to its site.
std::int64_t buffer_length(std::size_t cut_top, std::size_t p, std::size_t k_from, std::size_t k_to);

/// A transition whose buffer would be negative.
struct GeometryViolation {
  std::string from;
  std::string symbol;
  std::string to;
  std::int64_t buffer = 0;
  std::size_t required_cut_top = 0;
};

struct FeasibilityReport {
  bool feasible = true;
  std::string enzyme;
  Parameters params;
  std::size_t available_codewords = 0;
  std::size_t required_codewords = 0;
  std::int64_t spacer_length = 0;
  std::size_t max_required_cut_top = 0;
  std::vector<GeometryViolation> violations;

  std::string describe() const;
};

/// Codeword supply (symbols plus terminator), buffer geometry of every
/// transition under default_offsets, and the initial spacer.
FeasibilityReport check_feasibility(const Fsm& fsm, const Enzyme& enzyme, std::size_t available);

/// Maps automaton symbols to codewords and states to sticky-end offsets.
/// State s reading symbol y exposes codewords[y][offsets[s] .. offsets[s]+l).
struct SymbolEncoding {
  std::size_t p = 0;
  std::size_t l = 0;
  std::vector<Word> codewords;  // indexed like Fsm::symbols()
  Word terminator;
  std::vector<std::size_t> offsets;  // indexed like Fsm::states()

  Word sticky_end(std::size_t symbol, std::size_t state) const;
  Word terminator_end(std::size_t state) const;
};

/// Explicit assignment. Checks that codewords plus terminator form a
/// (p,l)-distinguished language and that offsets fit; throws argument_error
/// otherwise.
SymbolEncoding make_encoding(const Fsm& fsm, std::size_t p, std::size_t l,
                             std::vector<Word> codewords, Word terminator);

/// Symbols in declaration order take the smallest codewords of `language`,
/// the next one becomes the terminator. Throws infeasible_error when fewer
/// than |symbols| + 1 codewords are available.
SymbolEncoding assign_codewords(const Fsm& fsm, const CodewordSet& language);

/// Same, skipping codewords that contain the recognition site or would form
/// it across a junction with an already chosen codeword.
SymbolEncoding assign_codewords(const Fsm& fsm, const CodewordSet& language, const Enzyme& enzyme);

/// Double-stranded unit recognition . buffer with a single-stranded bottom
/// extension that pairs with the (from, symbol) sticky end.
struct TransitionMolecule {
  std::size_t from = 0;
  std::size_t symbol = 0;
  std::size_t to = 0;
  std::string top;  // recognition followed by buffer
  std::size_t buffer_length = 0;
  Word overhang;  // letter-wise complement of the sticky end it binds

  std::string buffer(std::size_t recognition_length) const { return top.substr(recognition_length); }
  /// Bottom strand aligned letter by letter with top + sticky end.
  std::string bottom() const;
};

/// Geometry only: the buffer is left as `fill` (or all 'A' when empty).
/// Throws infeasible_error naming the required cut_top on a negative buffer.
TransitionMolecule encode_transition(const Fsm& fsm, std::size_t from, std::size_t symbol,
                                     std::size_t to, const SymbolEncoding& encoding,
                                     const Enzyme& enzyme, std::string_view fill = {});

/// Everything needed to run the automaton in simulation.
struct EncodingPlan {
  Fsm fsm;
  Enzyme enzyme;
  SymbolEncoding encoding;
  std::vector<TransitionMolecule> molecules;  // in Fsm::transitions() order
  std::string initial_spacer;
  std::string tail;

  const TransitionMolecule* molecule_for(std::size_t state, std::size_t symbol) const;
};

/// Derives all molecules and fills buffers, spacer and tail letter by letter
/// (A, C, G, T first-fit with backtracking) so that no recognition site
/// appears off its intended position and no fill window equals a sticky end
/// or its complement. Throws infeasible_error on geometry or fill failure.
EncodingPlan build_plan(Fsm fsm, Enzyme enzyme, SymbolEncoding encoding);

struct SiteReport {
  bool valid = true;
  std::string where;
  std::size_t position = 0;  // 1-based within `where`
  std::string problem;

  explicit operator bool() const noexcept { return valid; }
  std::string describe() const;
};

/// Independent audit of a finished plan.
SiteReport validate_no_spurious_sites(const EncodingPlan& plan);

}  // namespace dnafsm
