#include "dnafsm/simulator.hpp"

#include <map>

#include "dnafsm/error.hpp"

namespace dnafsm {

std::vector<std::size_t> parse_input(const Fsm& fsm, std::string_view text) {
  std::vector<std::string> names;
  if (text.find_first_of(", \t") != std::string_view::npos) {
    std::string current;
    for (char c : text) {
      if (c == ',' || c == ' ' || c == '\t') {
        if (!current.empty()) names.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) names.push_back(std::move(current));
  } else {
    for (char c : text) names.emplace_back(1, c);
  }
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto s = fsm.find_symbol(n);
    if (!s) throw argument_error("input symbol '" + n + "' is not in the automaton's alphabet");
    out.push_back(*s);
  }
  return out;
}

TapeState build_tape(const EncodingPlan& plan, const std::vector<std::size_t>& input) {
  TapeState tape;
  tape.top = plan.enzyme.recognition.str() + plan.initial_spacer;
  for (auto s : input) tape.top += plan.encoding.codewords.at(s).str();
  tape.top += plan.encoding.terminator.str() + plan.tail;
  return tape;
}

namespace {

void require_single_site(const std::string& top, const std::string& site) {
  if (!top.starts_with(site))
    throw molecule_error("recognition site " + site + " not at the front of the tape");
  const auto again = top.find(site, 1);
  if (again != std::string::npos)
    throw molecule_error("second recognition site " + site + " at position " +
                         std::to_string(again + 1));
}

TapeState cleave(TapeState tape, const Enzyme& enzyme) {
  const std::string& site = enzyme.recognition.str();
  require_single_site(tape.top, site);
  if (tape.top.size() < site.size() + enzyme.cut_bottom)
    throw molecule_error("tape of " + std::to_string(tape.top.size()) +
                         " letters is too short to cut");
  tape.top.erase(0, site.size() + enzyme.cut_top);
  tape.overhang = enzyme.overhang();
  return tape;
}

}  // namespace

TapeState initial_cut(TapeState tape, const Enzyme& enzyme) {
  if (tape.overhang != 0) throw molecule_error("initial cut needs a blunt tape");
  return cleave(std::move(tape), enzyme);
}

TapeState cut(TapeState tape, const Enzyme& enzyme) {
  return cleave(std::move(tape), enzyme);
}

TapeState ligate(TapeState tape, const TransitionMolecule& m) {
  const std::string exposed = tape.exposed();
  const std::string& ov = m.overhang.str();
  if (ov.size() != exposed.size())
    throw molecule_error("overhang of length " + std::to_string(ov.size()) +
                         " cannot pair with exposed end of length " + std::to_string(exposed.size()));
  const auto& dna = PairedAlphabet::dna();
  for (std::size_t i = 0; i < ov.size(); ++i)
    if (dna.complement(exposed[i]) != ov[i])
      throw molecule_error("hybridization mismatch at position " + std::to_string(i + 1) + ": " +
                           exposed + " vs " + ov);
  tape.top.insert(0, m.top);
  tape.overhang = 0;
  return tape;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::halted_on_terminator: return "halted-on-terminator";
    case Outcome::stuck_undefined_transition: return "stuck-undefined-transition";
    case Outcome::error: return "error";
  }
  return "?";
}

namespace {

struct Decoded {
  std::size_t state;
  std::optional<std::size_t> symbol;
};

std::map<std::string, Decoded> decode_table(const EncodingPlan& plan) {
  const auto& enc = plan.encoding;
  std::map<std::string, Decoded> table;
  auto add = [&](const std::string& key, Decoded d) {
    if (!table.emplace(key, d).second)
      throw molecule_error("sticky end " + key + " decodes two ways");
  };
  for (std::size_t s = 0; s < plan.fsm.states().size(); ++s) {
    for (std::size_t y = 0; y < plan.fsm.symbols().size(); ++y)
      add(enc.sticky_end(y, s).str(), {s, y});
    add(enc.terminator_end(s).str(), {s, std::nullopt});
  }
  return table;
}

}  // namespace

RunResult run(const EncodingPlan& plan, const std::vector<std::size_t>& input) {
  RunResult result;
  TapeState tape = build_tape(plan, input);
  try {
    const auto table = decode_table(plan);
    tape = initial_cut(std::move(tape), plan.enzyme);
    ++result.cuts;
    while (true) {
      TraceStep step;
      step.index = result.trace.size() + 1;
      step.exposed = tape.exposed();
      auto it = table.find(step.exposed);
      if (it == table.end()) {
        result.trace.push_back(step);
        result.error = "exposed end " + step.exposed + " matches no sticky end";
        result.outcome = Outcome::error;
        return result;
      }
      step.state = it->second.state;
      step.symbol = it->second.symbol;
      result.final_state = step.state;
      if (!step.symbol) {
        result.trace.push_back(step);
        result.outcome = Outcome::halted_on_terminator;
        result.accepted = plan.fsm.is_final(step.state);
        return result;
      }
      const TransitionMolecule* m = plan.molecule_for(step.state, *step.symbol);
      if (!m) {
        result.trace.push_back(step);
        result.outcome = Outcome::stuck_undefined_transition;
        return result;
      }
      step.molecule = *m;
      const std::size_t before = tape.top.size();
      // Record the step first so a failing cut still leaves it in the trace.
      result.trace.push_back(step);
      tape = ligate(std::move(tape), *m);
      ++result.ligations;
      tape = cut(std::move(tape), plan.enzyme);
      ++result.cuts;
      ++tape.consumed_symbols;
      result.trace.back().letters_consumed = before - tape.top.size();
    }
  } catch (const molecule_error& e) {
    result.outcome = Outcome::error;
    result.accepted = false;
    result.error = e.what();
  }
  return result;
}

std::string format_step(const EncodingPlan& plan, const TraceStep& step) {
  return "step " + std::to_string(step.index) + ": exposed=" + step.exposed +
         " state=" + plan.fsm.states()[step.state] +
         " symbol=" + (step.symbol ? plan.fsm.symbols()[*step.symbol] : std::string("t")) +
         " consumed=" + std::to_string(step.letters_consumed);
}

std::string format_result(const EncodingPlan& plan, const RunResult& result) {
  std::string s = "result: state=";
  s += result.final_state ? plan.fsm.states()[*result.final_state] : std::string("-");
  s += " accepted=";
  s += result.accepted ? "true" : "false";
  s += " outcome=";
  s += to_string(result.outcome);
  return s;
}

ExecResult fsm_execute(const Fsm& fsm, const std::vector<std::size_t>& input) {
  ExecResult r{fsm.initial_index(), false, false};
  for (auto y : input) {
    auto next = fsm.next(r.state, y);
    if (!next) {
      r.stuck = true;
      return r;
    }
    r.state = *next;
  }
  r.accepted = fsm.is_final(r.state);
  return r;
}

}  // namespace dnafsm
