#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dnafsm {

/// A finite alphabet together with a fixed-point-free involutive pairing.
///
/// The canonical instance is DNA: letters A, C, G, T with A<->T and C<->G.
class PairedAlphabet {
 public:
  /// Builds an alphabet from its letters (in order) and the pairs that make up
  /// the pairing. Every letter must occur in exactly one pair and no letter may
  /// pair with itself.
  PairedAlphabet(std::string letters, std::vector<std::pair<char, char>> pairs);

  static const PairedAlphabet& dna();

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  bool contains(char c) const noexcept;
  /// Position of `c` in the alphabet order, or npos.
  std::size_t rank(char c) const noexcept;
  char complement(char c) const;

 private:
  std::string letters_;
  std::string mates_;  // mates_[rank(c)] is the partner of c
};

/// A non-empty sequence of alphabet letters, stored uppercase.
///
/// Slicing is 1-indexed and inclusive on both ends, i.e. `slice(i, j)` is
/// the subword a_i ... a_j.
class Word {
 public:
  Word() = default;
  /// Accepts upper- or lowercase letters; throws argument_error on anything
  /// outside the alphabet or on empty input.
  explicit Word(std::string_view text,
                const PairedAlphabet& alphabet = PairedAlphabet::dna());

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }
  const std::string& str() const noexcept { return letters_; }

  Word slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  struct unchecked_tag {};
  Word(std::string letters, unchecked_tag) : letters_(std::move(letters)) {}

  friend Word complement(const Word&, const PairedAlphabet&);

  std::string letters_;
};

Word complement(const Word& w,
                const PairedAlphabet& alphabet = PairedAlphabet::dna());

bool is_palindrome(const Word& w,
                   const PairedAlphabet& alphabet = PairedAlphabet::dna());

/// The p-l+1 length-l windows of `w`, left to right, duplicates kept.
std::vector<Word> subwords(const Word& w, std::size_t l);

enum class ValidityReason {
  ok,
  repeated_subword,
  palindrome_subword,
  complement_pair_subwords,
};

std::string_view to_string(ValidityReason reason);

struct ValidityReport {
  bool valid = true;
  ValidityReason reason = ValidityReason::ok;
  /// Offending l-mers (one or two).
  std::vector<Word> witness;
  /// Codewords involved when checking a whole set (one or two).
  std::vector<Word> culprits;

  explicit operator bool() const noexcept { return valid; }
  std::string describe() const;
};

/// Checks that `w` (of length p) has pairwise distinct, non-palindromic,
/// pairwise non-complementary length-l windows. On failure the first rule
/// broken is reported, in the order palindrome, repeat, complement.
ValidityReport is_valid(const Word& w, std::size_t p, std::size_t l,
                        const PairedAlphabet& alphabet = PairedAlphabet::dna());

/// A set of distinct length-p words kept in lexicographic order.
class CodewordSet {
 public:
  CodewordSet(std::size_t p, std::size_t l) : CodewordSet(p, l, {}) {}
  /// Throws argument_error on a length mismatch or a duplicate word.
  CodewordSet(std::size_t p, std::size_t l, std::vector<Word> words);

  std::size_t p() const noexcept { return p_; }
  std::size_t l() const noexcept { return l_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& operator[](std::size_t i) const noexcept { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  bool contains(const Word& w) const;

  friend bool operator==(const CodewordSet&, const CodewordSet&) = default;

 private:
  std::size_t p_;
  std::size_t l_;
  std::vector<Word> words_;
};

/// Checks that every word is (p,l)-valid and that no two words share an l-mer
/// or complement of one. Collisions are reported as repeated_subword (same
/// l-mer in both) or complement_pair_subwords (l-mer in one, its complement
/// in the other).
ValidityReport verify_distinguished(const CodewordSet& set);

/// Largest word length `enumerate_valid_words` will scan exhaustively.
inline constexpr std::size_t default_enumeration_limit = 8;

/// All (p,l)-valid words over DNA in lexicographic order. Throws budget_error
/// when p exceeds `max_p`.
CodewordSet enumerate_valid_words(std::size_t p, std::size_t l,
                                  std::size_t max_p = default_enumeration_limit);

}  // namespace dnafsm
