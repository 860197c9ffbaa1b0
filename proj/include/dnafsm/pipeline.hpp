#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnafsm/encoding.hpp"
#include "dnafsm/exact.hpp"

namespace dnafsm {

enum class Method { heuristic, exact };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

struct Language {
  CodewordSet set;
  Method method = Method::heuristic;
  std::optional<bool> optimal;  // exact only
};

Language generate_language(std::size_t p, std::size_t l, Method method,
                           seconds_d budget = default_exact_budget);

/// `# p=<p> l=<l> n=<count> method=<m>[ optimal=<bool>]` then one word per line.
void write_codewords(std::ostream& out, const Language& language);

/// Skips blank lines and lines starting with '#'. Throws argument_error on a
/// malformed word (with its line number) or a length other than p.
CodewordSet read_codewords(std::istream& in, std::size_t p, std::size_t l);

struct Selection {
  std::optional<EncodingPlan> plan;
  std::vector<FeasibilityReport> reports;  // one per enzyme tried
  std::vector<std::string> failures;       // construction problems past the geometry check
};

/// Tries `enzyme` when given, otherwise every database entry in order, and
/// keeps the first one that yields a complete plan.
Selection select_and_plan(const Fsm& fsm, const std::vector<Enzyme>& db,
                          const std::optional<std::string>& enzyme, Method method,
                          seconds_d budget = default_exact_budget);

}  // namespace dnafsm
