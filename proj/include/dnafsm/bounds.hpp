#pragma once

#include <cstdint>
#include <string>

namespace dnafsm {

/// Closed-form capacity limits for codeword length p and sticky-end length l.
struct BoundReport {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::uint64_t palindrome_count = 0;
  std::uint64_t max_language_size = 0;
  std::uint64_t max_states = 0;
  std::uint64_t max_fsm_symbols = 0;
  std::uint64_t max_transitions = 0;
};

/// Number of length-l Watson-Crick palindromes over DNA: 4^ceil(l/2).
/// For odd l the middle letter is unconstrained.
std::uint64_t palindrome_count(std::uint64_t l);

/// floor((4^l - palindromes) / (2 (p - l + 1))): every codeword consumes
/// p-l+1 l-mers plus their complements, all distinct across the language.
std::uint64_t max_language_size(std::uint64_t p, std::uint64_t l);

/// One state per sticky-end offset inside a codeword.
std::uint64_t max_states(std::uint64_t p, std::uint64_t l);

/// One codeword is reserved for the terminator.
std::uint64_t max_fsm_symbols(std::uint64_t p, std::uint64_t l);

std::uint64_t max_transitions(std::uint64_t p, std::uint64_t l);

BoundReport bound_report(std::uint64_t p, std::uint64_t l);

/// Aligned "key  value" lines.
std::string format_bound_report(const BoundReport& report);

}  // namespace dnafsm
