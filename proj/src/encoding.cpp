#include "dnafsm/encoding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dnafsm/error.hpp"

namespace dnafsm {

Parameters derive_parameters(const Fsm& fsm, const Enzyme& enzyme) {
  if (fsm.states().empty()) throw argument_error("automaton needs at least one state");
  const std::size_t l = enzyme.overhang();
  return {l + fsm.states().size() - 1, l};
}

std::vector<std::size_t> default_offsets(const Fsm& fsm) {
  std::vector<std::size_t> offsets(fsm.states().size());
  std::size_t next = 1;
  for (std::size_t s = 0; s < offsets.size(); ++s)
    offsets[s] = (s == fsm.initial_index()) ? 0 : next++;
  return offsets;
}

std::int64_t buffer_length(std::size_t cut_top, std::size_t p, std::size_t k_from, std::size_t k_to) {
  return static_cast<std::int64_t>(cut_top) - static_cast<std::int64_t>(p - k_from) -
         static_cast<std::int64_t>(k_to);
}

std::string FeasibilityReport::describe() const {
  std::ostringstream os;
  os << "enzyme " << enzyme << ": " << (feasible ? "feasible" : "infeasible") << " (p=" << params.p
     << " l=" << params.l << ")\n";
  os << "  codewords: need " << required_codewords << " (symbols + terminator), have "
     << available_codewords << "\n";
  os << "  initial spacer: " << spacer_length << "\n";
  os << "  deepest transition needs cut_top >= " << max_required_cut_top << "\n";
  for (const auto& v : violations)
    os << "  transition " << v.from << " --" << v.symbol << "--> " << v.to << ": buffer " << v.buffer
       << ", requires cut_top >= " << v.required_cut_top << "\n";
  if (!violations.empty())
    os << "  note: a transition from offset k_from to offset k_to consumes (p - k_from) + k_to\n"
          "  letters, so the top-strand cut must lie at least that far past the recognition\n"
          "  site; see README.md, \"Cut geometry\", for why this rejects short-reach enzymes\n"
          "  on many-state machines.\n";
  return os.str();
}

FeasibilityReport check_feasibility(const Fsm& fsm, const Enzyme& enzyme, std::size_t available) {
  FeasibilityReport report;
  report.enzyme = enzyme.name;
  report.params = derive_parameters(fsm, enzyme);
  report.available_codewords = available;
  report.required_codewords = fsm.symbols().size() + 1;

  const auto offsets = default_offsets(fsm);
  const std::size_t p = report.params.p;
  report.spacer_length = static_cast<std::int64_t>(enzyme.cut_top) -
                         static_cast<std::int64_t>(offsets[fsm.initial_index()]);
  for (const auto& t : fsm.transitions()) {
    const std::size_t k_from = offsets[fsm.state_index(t.from)];
    const std::size_t k_to = offsets[fsm.state_index(t.to)];
    const std::size_t required = (p - k_from) + k_to;
    report.max_required_cut_top = std::max(report.max_required_cut_top, required);
    const auto b = buffer_length(enzyme.cut_top, p, k_from, k_to);
    if (b < 0) report.violations.push_back({t.from, t.symbol, t.to, b, required});
  }
  report.feasible = report.available_codewords >= report.required_codewords &&
                    report.violations.empty() && report.spacer_length >= 0;
  return report;
}

Word SymbolEncoding::sticky_end(std::size_t symbol, std::size_t state) const {
  const std::size_t k = offsets.at(state);
  return codewords.at(symbol).slice(k + 1, k + l);
}

Word SymbolEncoding::terminator_end(std::size_t state) const {
  const std::size_t k = offsets.at(state);
  return terminator.slice(k + 1, k + l);
}

SymbolEncoding make_encoding(const Fsm& fsm, std::size_t p, std::size_t l,
                             std::vector<Word> codewords, Word terminator) {
  if (codewords.size() != fsm.symbols().size())
    throw argument_error("need exactly one codeword per symbol");
  if (fsm.states().size() > p - l + 1)
    throw argument_error("codewords of length " + std::to_string(p) + " hold only " +
                         std::to_string(p - l + 1) + " states");
  std::vector<Word> all = codewords;
  all.push_back(terminator);
  const auto report = verify_distinguished(CodewordSet(p, l, all));
  if (!report)
    throw argument_error("codewords are not (" + std::to_string(p) + "," + std::to_string(l) +
                         ")-distinguished: " + report.describe());
  return SymbolEncoding{p, l, std::move(codewords), std::move(terminator), default_offsets(fsm)};
}

namespace {

SymbolEncoding assign_from(const Fsm& fsm, const CodewordSet& language,
                           const std::vector<Word>& usable) {
  const std::size_t needed = fsm.symbols().size() + 1;
  if (usable.size() < needed)
    throw infeasible_error("need " + std::to_string(needed) + " codewords (symbols + terminator), only " +
                           std::to_string(usable.size()) + " available");
  std::vector<Word> codewords(usable.begin(), usable.begin() + static_cast<std::ptrdiff_t>(needed - 1));
  return make_encoding(fsm, language.p(), language.l(), std::move(codewords), usable[needed - 1]);
}

bool contains(std::string_view text, std::string_view pattern) {
  return text.find(pattern) != std::string_view::npos;
}

}  // namespace

SymbolEncoding assign_codewords(const Fsm& fsm, const CodewordSet& language) {
  return assign_from(fsm, language, language.words());
}

SymbolEncoding assign_codewords(const Fsm& fsm, const CodewordSet& language, const Enzyme& enzyme) {
  const std::string& site = enzyme.recognition.str();
  const std::size_t needed = fsm.symbols().size() + 1;
  std::vector<Word> chosen;
  for (const auto& w : language) {
    if (chosen.size() == needed) break;
    const std::string& s = w.str();
    if (contains(s + s, site)) continue;
    bool clash = false;
    for (const auto& u : chosen)
      if (contains(u.str() + s, site) || contains(s + u.str(), site)) {
        clash = true;
        break;
      }
    if (!clash) chosen.push_back(w);
  }
  return assign_from(fsm, language, chosen);
}

std::string TransitionMolecule::bottom() const {
  std::string out;
  out.reserve(top.size() + overhang.size());
  for (char c : top) out.push_back(PairedAlphabet::dna().complement(c));
  out += overhang.str();
  return out;
}

TransitionMolecule encode_transition(const Fsm& fsm, std::size_t from, std::size_t symbol,
                                     std::size_t to, const SymbolEncoding& encoding,
                                     const Enzyme& enzyme, std::string_view fill) {
  const std::size_t k_from = encoding.offsets.at(from);
  const std::size_t k_to = encoding.offsets.at(to);
  const auto b = buffer_length(enzyme.cut_top, encoding.p, k_from, k_to);
  if (b < 0)
    throw infeasible_error("transition " + fsm.states()[from] + " --" + fsm.symbols()[symbol] +
                           "--> " + fsm.states()[to] + " needs cut_top >= " +
                           std::to_string(enzyme.cut_top - b) + ", enzyme " + enzyme.name +
                           " cuts at " + std::to_string(enzyme.cut_top));
  const auto length = static_cast<std::size_t>(b);
  std::string buffer(fill);
  if (buffer.empty()) buffer.assign(length, 'A');
  if (buffer.size() != length) throw argument_error("buffer fill has the wrong length");

  TransitionMolecule m;
  m.from = from;
  m.symbol = symbol;
  m.to = to;
  m.top = enzyme.recognition.str() + buffer;
  m.buffer_length = length;
  m.overhang = complement(encoding.sticky_end(symbol, from));
  return m;
}

const TransitionMolecule* EncodingPlan::molecule_for(std::size_t state, std::size_t symbol) const {
  for (const auto& m : molecules)
    if (m.from == state && m.symbol == symbol) return &m;
  return nullptr;
}

namespace {

std::vector<std::string> stream_words(const SymbolEncoding& enc) {
  std::vector<std::string> out;
  for (const auto& w : enc.codewords) out.push_back(w.str());
  out.push_back(enc.terminator.str());
  return out;
}

std::set<std::string> forbidden_windows(const SymbolEncoding& enc) {
  std::set<std::string> out;
  for (const auto& s : stream_words(enc)) {
    const Word w(s);
    for (const auto& sub : subwords(w, enc.l)) {
      out.insert(sub.str());
      out.insert(complement(sub).str());
    }
  }
  return out;
}

/// First recognition-site occurrence in `text` at a position other than
/// `allowed` (pass npos to allow none).
std::size_t stray_site(std::string_view text, std::string_view site, std::size_t allowed) {
  for (std::size_t pos = text.find(site); pos != std::string_view::npos; pos = text.find(site, pos + 1))
    if (pos != allowed) return pos;
  return std::string_view::npos;
}

class Filler {
 public:
  Filler(std::string_view site, std::size_t l, const std::set<std::string>& forbidden)
      : site_(site), l_(l), forbidden_(forbidden) {}

  /// `prefix` precedes the fill; each of `suffixes` may follow it. The site
  /// is allowed at position 0 only when `site_at_start`.
  std::optional<std::string> fill(std::size_t length, const std::string& prefix,
                                  const std::vector<std::string>& suffixes, bool site_at_start) {
    length_ = length;
    prefix_ = &prefix;
    suffixes_ = &suffixes;
    allowed_ = site_at_start ? 0 : std::string_view::npos;
    budget_ = 200000;
    text_ = prefix;
    if (extend()) return text_.substr(prefix.size());
    return std::nullopt;
  }

 private:
  bool extend() {
    if (budget_-- == 0) return false;
    const std::size_t done = text_.size() - prefix_->size();
    if (done == length_) {
      for (const auto& s : *suffixes_)
        if (stray_site(text_ + s, site_, allowed_) != std::string_view::npos) return false;
      return true;
    }
    for (char c : {'A', 'C', 'G', 'T'}) {
      text_.push_back(c);
      if (acceptable(done + 1) && extend()) return true;
      text_.pop_back();
    }
    return false;
  }

  bool acceptable(std::size_t filled) const {
    if (text_.size() >= site_.size() && text_.ends_with(site_)) {
      const std::size_t pos = text_.size() - site_.size();
      if (pos != allowed_) return false;
    }
    if (filled >= l_ && forbidden_.contains(text_.substr(text_.size() - l_))) return false;
    return true;
  }

  std::string site_;
  std::size_t l_;
  const std::set<std::string>& forbidden_;
  std::size_t length_ = 0;
  const std::string* prefix_ = nullptr;
  const std::vector<std::string>* suffixes_ = nullptr;
  std::size_t allowed_ = 0;
  std::size_t budget_ = 0;
  std::string text_;
};

}  // namespace

EncodingPlan build_plan(Fsm fsm, Enzyme enzyme, SymbolEncoding encoding) {
  if (encoding.l != enzyme.overhang())
    throw argument_error("sticky-end length " + std::to_string(encoding.l) + " does not match " +
                         enzyme.name + " overhang " + std::to_string(enzyme.overhang()));
  if (encoding.codewords.size() != fsm.symbols().size() || encoding.offsets.size() != fsm.states().size())
    throw argument_error("encoding does not match the automaton");

  const std::string& site = enzyme.recognition.str();
  const auto stream = stream_words(encoding);
  const auto forbidden = forbidden_windows(encoding);
  Filler filler(site, encoding.l, forbidden);

  for (std::size_t i = 0; i < stream.size(); ++i)
    for (std::size_t j = 0; j < stream.size(); ++j)
      if (stray_site(stream[i] + stream[j], site, std::string_view::npos) != std::string_view::npos)
        throw infeasible_error("recognition site " + site + " occurs in codeword stream " + stream[i] +
                               stream[j]);

  std::vector<std::string> pairs;
  for (const auto& a : stream)
    for (const auto& b : stream) pairs.push_back(a + b);

  EncodingPlan plan{std::move(fsm), std::move(enzyme), std::move(encoding), {}, {}, {}};
  const auto& f = plan.fsm;
  const auto& enc = plan.encoding;
  const std::string prefix = site;

  for (const auto& t : f.transitions()) {
    const std::size_t from = f.state_index(t.from);
    const std::size_t sym = f.symbol_index(t.symbol);
    const std::size_t to = f.state_index(t.to);
    // Validates geometry before any fill work.
    TransitionMolecule bare = encode_transition(f, from, sym, to, enc, plan.enzyme);
    std::vector<std::string> after;
    const std::string rest = enc.codewords[sym].str().substr(enc.offsets[from]);
    for (const auto& s : stream) after.push_back(rest + s);
    const auto buffer = filler.fill(bare.buffer_length, prefix, after, true);
    if (!buffer)
      throw infeasible_error("no buffer fill avoids stray sites for " + t.from + " --" + t.symbol +
                             "--> " + t.to);
    plan.molecules.push_back(encode_transition(f, from, sym, to, enc, plan.enzyme, *buffer));
  }

  const std::size_t spacer = plan.enzyme.cut_top - enc.offsets[f.initial_index()];
  const auto spacer_fill = filler.fill(spacer, prefix, pairs, true);
  if (!spacer_fill) throw infeasible_error("no initial spacer avoids stray sites");
  plan.initial_spacer = *spacer_fill;

  const auto tail = filler.fill(plan.enzyme.overhang(), enc.terminator.str(), {""}, false);
  if (!tail) throw infeasible_error("no tape tail avoids stray sites");
  plan.tail = *tail;

  const auto audit = validate_no_spurious_sites(plan);
  if (!audit) throw infeasible_error("plan failed site audit: " + audit.describe());
  return plan;
}

std::string SiteReport::describe() const {
  if (valid) return "ok";
  return problem + " in " + where + " at position " + std::to_string(position);
}

SiteReport validate_no_spurious_sites(const EncodingPlan& plan) {
  const auto& enc = plan.encoding;
  const std::string& site = plan.enzyme.recognition.str();
  const auto stream = stream_words(enc);
  const auto forbidden = forbidden_windows(enc);
  constexpr auto none = std::string_view::npos;
  auto fail = [](std::string where, std::size_t pos, std::string problem) {
    return SiteReport{false, std::move(where), pos + 1, std::move(problem)};
  };
  const std::string stray = "stray recognition site " + site;

  for (const auto& a : stream)
    for (const auto& b : stream)
      if (auto pos = stray_site(a + b, site, none); pos != none)
        return fail("codeword junction " + a + "|" + b, pos, stray);

  for (const auto& a : stream)
    for (const auto& b : stream)
      if (auto pos = stray_site(site + plan.initial_spacer + a + b, site, 0); pos != none)
        return fail("tape prefix before " + a + "|" + b, pos, stray);

  for (const auto& a : stream)
    if (auto pos = stray_site(a + enc.terminator.str() + plan.tail, site, none); pos != none)
      return fail("tape tail after " + a, pos, stray);

  const auto& f = plan.fsm;
  for (const auto& m : plan.molecules) {
    const std::string label = "molecule " + f.states()[m.from] + " --" + f.symbols()[m.symbol] +
                              "--> " + f.states()[m.to];
    const std::string rest = enc.codewords[m.symbol].str().substr(enc.offsets[m.from]);
    for (const auto& a : stream)
      if (auto pos = stray_site(m.top + rest + a, site, 0); pos != none)
        return fail(label + " before " + a, pos, stray);
  }

  auto scan_windows = [&](const std::string& where, const std::string& fill) -> SiteReport {
    for (std::size_t i = 0; i + enc.l <= fill.size(); ++i)
      if (forbidden.contains(fill.substr(i, enc.l)))
        return fail(where, i, "fill window " + fill.substr(i, enc.l) + " equals a sticky end or its complement");
    return {};
  };
  if (auto r = scan_windows("initial spacer", plan.initial_spacer); !r) return r;
  if (auto r = scan_windows("tape tail", plan.tail); !r) return r;
  for (const auto& m : plan.molecules) {
    const std::string label = "buffer of " + f.states()[m.from] + " --" + f.symbols()[m.symbol] +
                              "--> " + f.states()[m.to];
    if (auto r = scan_windows(label, m.buffer(site.size())); !r) return r;
  }
  return {};
}

}  // namespace dnafsm
