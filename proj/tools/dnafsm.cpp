// dnafsm: bound, generate, verify, encode and simulate DNA codeword automata.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dnafsm/bounds.hpp"
#include "dnafsm/error.hpp"
#include "dnafsm/pipeline.hpp"
#include "dnafsm/simulator.hpp"

using namespace dnafsm;

namespace {

constexpr int exit_usage = 64;
constexpr int exit_infeasible = 2;
constexpr int exit_io = 74;

// Reference (p,l) rows for regression comparison.
constexpr std::pair<std::size_t, std::size_t> table_rows[] = {
    {6, 4}, {7, 4}, {7, 5}, {8, 4}, {8, 6}, {9, 4}, {10, 4}};

struct Options {
  bool quiet = false;
  std::string seed_order = "lex";

  std::size_t p = 0, l = 0;
  bool table = false;
  std::string method = "heuristic";
  double budget = 600;
  std::string output;
  std::string words_file;

  std::string fsm_file, enzymes_file, enzyme, input;
  bool trace = false;
};

int cmd_bound(const Options& o) {
  if (o.table) {
    std::cout << std::setw(4) << "p" << std::setw(4) << "l" << std::setw(12) << "size"
              << std::setw(8) << "states" << "\n";
    for (auto [p, l] : table_rows)
      std::cout << std::setw(4) << p << std::setw(4) << l << std::setw(12) << max_language_size(p, l)
                << std::setw(8) << max_states(p, l) << "\n";
    return 0;
  }
  if (o.p == 0 || o.l == 0) throw argument_error("bound needs -p and -l (or --table)");
  std::cout << format_bound_report(bound_report(o.p, o.l));
  return 0;
}

int cmd_gen(const Options& o) {
  const Method m = parse_method(o.method);
  if (o.budget <= 0) throw argument_error("--budget must be positive");
  const Language lang = generate_language(o.p, o.l, m, seconds_d(o.budget));
  if (o.output.empty()) {
    write_codewords(std::cout, lang);
  } else {
    std::ofstream out(o.output);
    if (!out) throw io_error("cannot write " + o.output);
    write_codewords(out, lang);
    if (!out.flush()) throw io_error("write to " + o.output + " failed");
  }
  if (!o.quiet) {
    std::cerr << "generated " << lang.set.size() << " words (bound " << max_language_size(o.p, o.l) << ")";
    if (lang.optimal) std::cerr << (*lang.optimal ? ", optimal" : ", budget exhausted");
    std::cerr << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::ifstream in(o.words_file);
  if (!in) throw io_error("cannot open " + o.words_file);
  const CodewordSet set = read_codewords(in, o.p, o.l);
  const auto report = verify_distinguished(set);
  if (!report) {
    std::cout << "not distinguished: " << report.describe() << "\n";
    return 1;
  }
  const auto bound = max_language_size(o.p, o.l);
  std::cout << "ok: " << set.size() << " words are (" << o.p << "," << o.l << ")-distinguished";
  if (set.size() == bound) std::cout << "; size meets the bound, so the set is maximum";
  std::cout << "\n";
  return 0;
}

Selection plan_from(const Options& o) {
  const Fsm fsm = load_fsm(o.fsm_file);
  const auto db = load_enzymes(o.enzymes_file);
  std::optional<std::string> name;
  if (!o.enzyme.empty()) name = o.enzyme;
  return select_and_plan(fsm, db, name, parse_method(o.method), seconds_d(o.budget));
}

void print_failure(const Selection& s) {
  for (const auto& r : s.reports) std::cerr << r.describe();
  for (const auto& f : s.failures) std::cerr << f << "\n";
  std::cerr << "no enzyme yields a workable encoding\n";
}

int cmd_encode(const Options& o) {
  const Selection s = plan_from(o);
  if (!s.plan) {
    print_failure(s);
    return exit_infeasible;
  }
  const EncodingPlan& plan = *s.plan;
  const auto& f = plan.fsm;
  const auto& enc = plan.encoding;
  const auto& e = plan.enzyme;
  std::cout << "enzyme: " << e.name << " " << e.recognition.str() << " " << e.cut_top << "/"
            << e.cut_bottom << "\n";
  std::cout << "parameters: p=" << enc.p << " l=" << enc.l << "\n";
  std::cout << "codewords:\n";
  for (std::size_t y = 0; y < f.symbols().size(); ++y)
    std::cout << "  " << f.symbols()[y] << " " << enc.codewords[y].str() << "\n";
  std::cout << "  t " << enc.terminator.str() << "\n";
  std::cout << "offsets:\n";
  for (std::size_t st = 0; st < f.states().size(); ++st)
    std::cout << "  " << f.states()[st] << " " << enc.offsets[st] << "\n";
  std::cout << "initial spacer: " << plan.initial_spacer << "\n";
  std::cout << "transitions:\n";
  for (const auto& m : plan.molecules)
    std::cout << "  " << f.states()[m.from] << " --" << f.symbols()[m.symbol] << "--> "
              << f.states()[m.to] << " buffer=" << m.buffer_length << " top=" << m.top
              << " overhang=" << m.overhang.str() << "\n";
  return 0;
}

int cmd_simulate(const Options& o) {
  const Selection s = plan_from(o);
  if (!s.plan) {
    print_failure(s);
    return exit_infeasible;
  }
  const EncodingPlan& plan = *s.plan;
  const auto input = parse_input(plan.fsm, o.input);
  const RunResult r = run(plan, input);
  if (o.trace)
    for (const auto& step : r.trace) std::cout << format_step(plan, step) << "\n";
  std::cout << format_result(plan, r) << "\n";
  if (r.outcome == Outcome::error) {
    std::cerr << "error: " << r.error << "\n";
    return 2;
  }
  return r.accepted ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DNA codeword sets and restriction-enzyme automata"};
  app.set_version_flag("--version", "dnafsm 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--quiet", o.quiet, "Suppress progress messages");
  app.add_option("--seed-order", o.seed_order, "Tie-breaking order (only lex is supported)")
      ->check(CLI::IsMember({"lex"}));

  auto* bound = app.add_subcommand("bound", "Capacity bounds for (p,l)");
  bound->add_option("-p", o.p, "Codeword length")->check(CLI::PositiveNumber);
  bound->add_option("-l", o.l, "Subword length")->check(CLI::PositiveNumber);
  bound->add_flag("--table", o.table, "Print the standard comparison rows");

  auto* gen = app.add_subcommand("gen", "Generate a distinguished language");
  gen->add_option("--method", o.method, "heuristic or exact")
      ->check(CLI::IsMember({"heuristic", "exact"}));
  gen->add_option("-p", o.p, "Codeword length")->required()->check(CLI::PositiveNumber);
  gen->add_option("-l", o.l, "Subword length")->required()->check(CLI::PositiveNumber);
  gen->add_option("--budget", o.budget, "Exact search budget in seconds");
  gen->add_option("-o", o.output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a codeword file");
  verify->add_option("-p", o.p, "Codeword length")->required()->check(CLI::PositiveNumber);
  verify->add_option("-l", o.l, "Subword length")->required()->check(CLI::PositiveNumber);
  verify->add_option("file", o.words_file, "Codeword file")->required();

  auto add_machine = [&](CLI::App* sub) {
    sub->add_option("--fsm", o.fsm_file, "Automaton JSON")->required();
    sub->add_option("--enzymes", o.enzymes_file, "Enzyme database JSON")->required();
    sub->add_option("--enzyme", o.enzyme, "Use this enzyme instead of the first feasible one");
    sub->add_option("--method", o.method, "Codeword generator")
        ->check(CLI::IsMember({"heuristic", "exact"}));
    sub->add_option("--budget", o.budget, "Exact search budget in seconds");
  };
  auto* encode = app.add_subcommand("encode", "Encode an automaton onto an enzyme");
  add_machine(encode);
  auto* simulate = app.add_subcommand("simulate", "Run an automaton by cut and ligate");
  add_machine(simulate);
  simulate->add_option("--input", o.input, "Symbol string")->required();
  simulate->add_flag("--trace", o.trace, "Print every step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  const bool simulating = simulate->parsed();
  try {
    if (bound->parsed()) return cmd_bound(o);
    if (gen->parsed()) return cmd_gen(o);
    if (verify->parsed()) return cmd_verify(o);
    if (encode->parsed()) return cmd_encode(o);
    return cmd_simulate(o);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return simulating ? 2 : exit_usage;
  }
}
