#include "dnafsm/alphabet.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dnafsm/error.hpp"
#include "dnafsm/kmer.hpp"

namespace dnafsm {

PairedAlphabet::PairedAlphabet(std::string letters,
                               std::vector<std::pair<char, char>> pairs)
    : letters_(std::move(letters)), mates_(letters_.size(), '\0') {
  if (letters_.empty()) throw argument_error("alphabet must not be empty");
  if (std::set<char>(letters_.begin(), letters_.end()).size() != letters_.size())
    throw argument_error("alphabet letters must be distinct");
  for (auto [a, b] : pairs) {
    std::size_t ra = rank(a), rb = rank(b);
    if (ra == std::string::npos || rb == std::string::npos)
      throw argument_error("pairing mentions a letter outside the alphabet");
    if (a == b) throw argument_error(std::string("letter ") + a + " pairs with itself");
    for (auto [r, mate] : {std::pair{ra, b}, std::pair{rb, a}}) {
      if (mates_[r] != '\0' && mates_[r] != mate)
        throw argument_error("letter appears in more than one pair");
      mates_[r] = mate;
    }
  }
  if (std::find(mates_.begin(), mates_.end(), '\0') != mates_.end())
    throw argument_error("every letter must appear in a pair");
}

const PairedAlphabet& PairedAlphabet::dna() {
  static const PairedAlphabet instance("ACGT", {{'A', 'T'}, {'C', 'G'}});
  return instance;
}

bool PairedAlphabet::contains(char c) const noexcept {
  return rank(c) != std::string::npos;
}

std::size_t PairedAlphabet::rank(char c) const noexcept {
  return letters_.find(c);
}

char PairedAlphabet::complement(char c) const {
  std::size_t r = rank(c);
  if (r == std::string::npos)
    throw argument_error(std::string("letter '") + c + "' not in alphabet");
  return mates_[r];
}

Word::Word(std::string_view text, const PairedAlphabet& alphabet) {
  if (text.empty()) throw argument_error("word must not be empty");
  letters_.reserve(text.size());
  for (char c : text) {
    char up = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
    if (!alphabet.contains(up))
      throw argument_error("invalid letter '" + std::string(1, c) + "' in word \"" +
                           std::string(text) + "\"");
    letters_.push_back(up);
  }
}

Word Word::slice(std::size_t first, std::size_t last) const {
  if (first < 1 || first > last || last > size())
    throw argument_error("slice [" + std::to_string(first) + "," +
                         std::to_string(last) + "] out of range for length " +
                         std::to_string(size()));
  return Word(letters_.substr(first - 1, last - first + 1), unchecked_tag{});
}

Word complement(const Word& w, const PairedAlphabet& alphabet) {
  std::string out(w.str());
  for (char& c : out) c = alphabet.complement(c);
  return Word(std::move(out), Word::unchecked_tag{});
}

bool is_palindrome(const Word& w, const PairedAlphabet& alphabet) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (alphabet.complement(w[i]) != w[n - 1 - i]) return false;
  }
  return true;
}

std::vector<Word> subwords(const Word& w, std::size_t l) {
  if (l < 1 || l > w.size())
    throw argument_error("subword length " + std::to_string(l) +
                         " out of range for word of length " + std::to_string(w.size()));
  std::vector<Word> out;
  out.reserve(w.size() - l + 1);
  for (std::size_t i = 1; i + l - 1 <= w.size(); ++i) out.push_back(w.slice(i, i + l - 1));
  return out;
}

std::string_view to_string(ValidityReason reason) {
  switch (reason) {
    case ValidityReason::ok: return "ok";
    case ValidityReason::repeated_subword: return "repeated-subword";
    case ValidityReason::palindrome_subword: return "palindrome-subword";
    case ValidityReason::complement_pair_subwords: return "complement-pair-subwords";
  }
  return "?";
}

std::string ValidityReport::describe() const {
  std::string s(to_string(reason));
  if (!culprits.empty()) {
    s += " in";
    for (const auto& w : culprits) s += " " + w.str();
  }
  if (!witness.empty()) {
    s += " (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) s += ", ";
      s += witness[i].str();
    }
    s += ")";
  }
  return s;
}

namespace {

ValidityReport failure(ValidityReason reason, std::vector<Word> witness,
                       std::vector<Word> culprits = {}) {
  return ValidityReport{false, reason, std::move(witness), std::move(culprits)};
}

}  // namespace

ValidityReport is_valid(const Word& w, std::size_t p, std::size_t l,
                        const PairedAlphabet& alphabet) {
  if (w.size() != p)
    throw argument_error("word " + w.str() + " has length " + std::to_string(w.size()) +
                         ", expected " + std::to_string(p));
  if (l < 1 || l > p)
    throw argument_error("subword length " + std::to_string(l) + " out of range");

  const auto subs = subwords(w, l);
  for (const auto& s : subs)
    if (is_palindrome(s, alphabet)) return failure(ValidityReason::palindrome_subword, {s});

  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (subs[i] == subs[j]) return failure(ValidityReason::repeated_subword, {subs[i]});

  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Word c = complement(subs[i], alphabet);
    for (std::size_t j = i; j < subs.size(); ++j)
      if (c == subs[j]) return failure(ValidityReason::complement_pair_subwords, {subs[i], subs[j]});
  }
  return {};
}

CodewordSet::CodewordSet(std::size_t p, std::size_t l, std::vector<Word> words)
    : p_(p), l_(l), words_(std::move(words)) {
  if (l_ < 1 || l_ > p_)
    throw argument_error("need 1 <= l <= p, got p=" + std::to_string(p_) +
                         " l=" + std::to_string(l_));
  for (const auto& w : words_)
    if (w.size() != p_)
      throw argument_error("word " + w.str() + " has length " + std::to_string(w.size()) +
                           ", expected " + std::to_string(p_));
  std::sort(words_.begin(), words_.end());
  auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end()) throw argument_error("duplicate codeword " + dup->str());
}

bool CodewordSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

ValidityReport verify_distinguished(const CodewordSet& set) {
  const std::size_t l = set.l();
  for (const auto& w : set) {
    auto report = is_valid(w, set.p(), l);
    if (!report) {
      report.culprits = {w};
      return report;
    }
  }
  // Each l-mer class {x, complement(x)} may be owned by at most one word.
  std::map<std::string, std::pair<std::size_t, Word>> owner;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const auto& s : subwords(set[i], l)) {
      const Word c = complement(s);
      const std::string& key = std::min(s.str(), c.str());
      auto [it, inserted] = owner.try_emplace(key, i, s);
      if (inserted) continue;
      const auto& [j, theirs] = it->second;
      return it->second.second == s
                 ? failure(ValidityReason::repeated_subword, {s}, {set[j], set[i]})
                 : failure(ValidityReason::complement_pair_subwords, {theirs, s},
                           {set[j], set[i]});
    }
  }
  return {};
}

CodewordSet enumerate_valid_words(std::size_t p, std::size_t l, std::size_t max_p) {
  if (l < 1 || l > p)
    throw argument_error("need 1 <= l <= p, got p=" + std::to_string(p) +
                         " l=" + std::to_string(l));
  if (p > max_p || p > kmer::max_length)
    throw budget_error("exhaustive scan of 4^" + std::to_string(p) +
                       " words exceeds the enumeration limit p <= " + std::to_string(max_p));

  const std::size_t windows = p - l + 1;
  std::vector<kmer::code_t> classes(windows);
  std::vector<Word> out;
  for (kmer::code_t code = 0; code < kmer::count(p); ++code) {
    bool ok = true;
    for (std::size_t i = 0; i < windows && ok; ++i) {
      const kmer::code_t sub = (code >> (2 * (windows - 1 - i))) & kmer::mask(l);
      if (kmer::is_palindrome(sub, l)) ok = false;
      classes[i] = kmer::pair_class(sub, l);
    }
    if (!ok) continue;
    // Distinct classes <=> distinct subwords with no complementary pair.
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(classes.begin(), classes.end()) != classes.end()) continue;
    out.emplace_back(kmer::decode(code, p));
  }
  return CodewordSet(p, l, std::move(out));
}

}  // namespace dnafsm
