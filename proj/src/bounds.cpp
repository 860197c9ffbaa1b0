#include "dnafsm/bounds.hpp"

#include <sstream>
#include <iomanip>

#include "dnafsm/error.hpp"

namespace dnafsm {

namespace {

void check_range(std::uint64_t p, std::uint64_t l) {
  if (l < 1 || l > p)
    throw argument_error("need 1 <= l <= p, got p=" + std::to_string(p) +
                         " l=" + std::to_string(l));
  if (l > 31) throw argument_error("l too large: 4^l overflows");
}

std::uint64_t pow4(std::uint64_t e) { return std::uint64_t{1} << (2 * e); }

}  // namespace

std::uint64_t palindrome_count(std::uint64_t l) {
  if (l < 1) throw argument_error("palindrome length must be positive");
  return pow4((l + 1) / 2);
}

std::uint64_t max_language_size(std::uint64_t p, std::uint64_t l) {
  check_range(p, l);
  return (pow4(l) - palindrome_count(l)) / (2 * (p - l + 1));
}

std::uint64_t max_states(std::uint64_t p, std::uint64_t l) {
  check_range(p, l);
  return p - l + 1;
}

std::uint64_t max_fsm_symbols(std::uint64_t p, std::uint64_t l) {
  const std::uint64_t n = max_language_size(p, l);
  return n == 0 ? 0 : n - 1;
}

std::uint64_t max_transitions(std::uint64_t p, std::uint64_t l) {
  return max_fsm_symbols(p, l) * max_states(p, l);
}

BoundReport bound_report(std::uint64_t p, std::uint64_t l) {
  return BoundReport{p,
                     l,
                     palindrome_count(l),
                     max_language_size(p, l),
                     max_states(p, l),
                     max_fsm_symbols(p, l),
                     max_transitions(p, l)};
}

std::string format_bound_report(const BoundReport& r) {
  std::ostringstream os;
  auto line = [&](const char* key, std::uint64_t v) {
    os << std::left << std::setw(18) << key << v << '\n';
  };
  line("p", r.p);
  line("l", r.l);
  line("palindrome_count", r.palindrome_count);
  line("max_language_size", r.max_language_size);
  line("max_states", r.max_states);
  line("max_fsm_symbols", r.max_fsm_symbols);
  line("max_transitions", r.max_transitions);
  return os.str();
}

}  // namespace dnafsm
