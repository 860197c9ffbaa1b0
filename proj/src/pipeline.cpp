#include "dnafsm/pipeline.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "dnafsm/error.hpp"
#include "dnafsm/heuristic.hpp"

namespace dnafsm {

std::string_view to_string(Method m) {
  return m == Method::exact ? "exact" : "heuristic";
}

Method parse_method(std::string_view text) {
  if (text == "heuristic") return Method::heuristic;
  if (text == "exact") return Method::exact;
  throw argument_error("unknown method '" + std::string(text) + "'");
}

Language generate_language(std::size_t p, std::size_t l, Method method, seconds_d budget) {
  if (method == Method::heuristic) return {heuristic_generate(p, l), method, std::nullopt};
  auto r = exact_generate(p, l, budget);
  return {std::move(r.set), method, r.optimal};
}

void write_codewords(std::ostream& out, const Language& language) {
  out << "# p=" << language.set.p() << " l=" << language.set.l() << " n=" << language.set.size()
      << " method=" << to_string(language.method);
  if (language.optimal) out << " optimal=" << (*language.optimal ? "true" : "false");
  out << "\n";
  for (const auto& w : language.set) out << w.str() << "\n";
}

CodewordSet read_codewords(std::istream& in, std::size_t p, std::size_t l) {
  std::vector<Word> words;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      words.emplace_back(std::string_view(line).substr(start));
    } catch (const argument_error& e) {
      throw argument_error("line " + std::to_string(n) + ": " + e.what());
    }
  }
  return CodewordSet(p, l, std::move(words));
}

namespace {

std::size_t usable_count(const CodewordSet& language, const Enzyme& enzyme) {
  std::size_t n = 0;
  for (const auto& w : language)
    if ((w.str() + w.str()).find(enzyme.recognition.str()) == std::string::npos) ++n;
  return n;
}

}  // namespace

Selection select_and_plan(const Fsm& fsm, const std::vector<Enzyme>& db,
                          const std::optional<std::string>& enzyme, Method method,
                          seconds_d budget) {
  std::vector<const Enzyme*> candidates;
  if (enzyme)
    candidates.push_back(&find_enzyme(db, *enzyme));
  else
    for (const auto& e : db) candidates.push_back(&e);

  Selection out;
  std::map<std::pair<std::size_t, std::size_t>, CodewordSet> cache;
  for (const Enzyme* e : candidates) {
    const auto params = derive_parameters(fsm, *e);
    auto it = cache.find({params.p, params.l});
    if (it == cache.end())
      it = cache.emplace(std::pair{params.p, params.l},
                         generate_language(params.p, params.l, method, budget).set)
               .first;
    const CodewordSet& language = it->second;

    auto report = check_feasibility(fsm, *e, usable_count(language, *e));
    out.reports.push_back(report);
    if (!report.feasible) continue;
    try {
      auto encoding = assign_codewords(fsm, language, *e);
      out.plan = build_plan(fsm, *e, std::move(encoding));
      return out;
    } catch (const infeasible_error& err) {
      out.failures.push_back(e->name + ": " + err.what());
    }
  }
  return out;
}

}  // namespace dnafsm
