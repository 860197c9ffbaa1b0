#include "doctest.h"

#include <fstream>

#include "dnafsm/alphabet.hpp"
#include "dnafsm/error.hpp"
#include "dnafsm/kmer.hpp"
#include "support.hpp"

using namespace dnafsm;

namespace {

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (auto s : list) out.emplace_back(s);
  return out;
}

}  // namespace

TEST_CASE("dna pairing") {
  const auto& dna = PairedAlphabet::dna();
  for (char c : dna.letters()) {
    CHECK(dna.complement(dna.complement(c)) == c);
    CHECK(dna.complement(c) != c);
  }
  CHECK(dna.complement('A') == 'T');
  CHECK(dna.complement('G') == 'C');
  CHECK_THROWS_AS(dna.complement('N'), argument_error);
}

TEST_CASE("alphabet construction rejects bad pairings") {
  CHECK_THROWS_AS(PairedAlphabet("AB", {{'A', 'A'}}), argument_error);
  CHECK_THROWS_AS(PairedAlphabet("ABC", {{'A', 'B'}}), argument_error);
  CHECK_THROWS_AS(PairedAlphabet("ABCD", {{'A', 'B'}, {'A', 'C'}}), argument_error);
  CHECK_THROWS_AS(PairedAlphabet("AA", {{'A', 'A'}}), argument_error);
  PairedAlphabet xy("XY", {{'X', 'Y'}});
  CHECK(complement(Word("XXY", xy), xy).str() == "YYX");
}

TEST_CASE("words") {
  CHECK(Word("acgt").str() == "ACGT");
  CHECK_THROWS_AS(Word("ACGN"), argument_error);
  CHECK_THROWS_AS(Word(""), argument_error);
  const Word w("ATTGC");
  CHECK(w.slice(2, 5).str() == "TTGC");
  CHECK(w.slice(1, 1).str() == "A");
  CHECK_THROWS_AS(w.slice(0, 2), argument_error);
  CHECK_THROWS_AS(w.slice(3, 2), argument_error);
  CHECK_THROWS_AS(w.slice(2, 6), argument_error);
}

TEST_CASE("complement is letter-wise") {
  CHECK(complement(Word("ATTGC")).str() == "TAACG");
  CHECK(complement(Word("A")).str() == "T");
  CHECK(complement(complement(Word("GGATG"))).str() == "GGATG");
}

TEST_CASE("palindromes") {
  CHECK(is_palindrome(Word("GCGC")));
  CHECK_FALSE(is_palindrome(Word("AAAA")));
  CHECK(is_palindrome(Word("ACT")));
  CHECK(is_palindrome(Word("GAATTC")));
  CHECK(is_palindrome(Word("A")));  // nothing to pair
  CHECK_FALSE(is_palindrome(Word("AA")));
  CHECK(is_palindrome(Word("AT")));
}

TEST_CASE("subwords") {
  auto s = subwords(Word("ATTGC"), 4);
  REQUIRE(s.size() == 2);
  CHECK(s[0].str() == "ATTG");
  CHECK(s[1].str() == "TTGC");
  s = subwords(Word("AAAAA"), 4);
  CHECK(s == words({"AAAA", "AAAA"}));
  CHECK(subwords(Word("ACGT"), 4) == words({"ACGT"}));
  CHECK_THROWS_AS(subwords(Word("ACG"), 4), argument_error);
  CHECK_THROWS_AS(subwords(Word("ACG"), 0), argument_error);
}

TEST_CASE("validity") {
  CHECK(is_valid(Word("ATTGC"), 5, 4));
  CHECK(is_valid(Word("AGTCA"), 5, 4));
  CHECK(is_valid(Word("TCGTG"), 5, 4));

  auto r = is_valid(Word("GCGCA"), 5, 4);
  CHECK_FALSE(r);
  CHECK(r.reason == ValidityReason::palindrome_subword);
  CHECK(r.witness == words({"GCGC"}));

  r = is_valid(Word("ACTGAC"), 6, 4);
  CHECK(r.reason == ValidityReason::complement_pair_subwords);
  CHECK(r.witness == words({"ACTG", "TGAC"}));
  CHECK(r.describe() == "complement-pair-subwords (ACTG, TGAC)");

  r = is_valid(Word("AAAAA"), 5, 4);
  CHECK(r.reason == ValidityReason::repeated_subword);

  CHECK_THROWS_AS(is_valid(Word("ACGT"), 5, 4), argument_error);
  CHECK_THROWS_AS(is_valid(Word("ACGT"), 4, 5), argument_error);
}

TEST_CASE("codeword sets") {
  CodewordSet s(5, 4, words({"TCGTG", "ATTGC", "AGTCA"}));
  CHECK(s[0].str() == "AGTCA");
  CHECK(s.contains(Word("ATTGC")));
  CHECK_FALSE(s.contains(Word("CATTG")));
  CHECK_THROWS_AS(CodewordSet(5, 4, words({"ATTGC", "ATTGC"})), argument_error);
  CHECK_THROWS_AS(CodewordSet(5, 4, words({"ATTG"})), argument_error);
  CHECK_THROWS_AS(CodewordSet(4, 5), argument_error);
}

TEST_CASE("verify_distinguished") {
  CHECK(verify_distinguished(CodewordSet(5, 4, words({"ATTGC", "AGTCA", "TCGTG"}))));

  auto r = verify_distinguished(CodewordSet(5, 4, words({"ATTGC", "CATTG"})));
  CHECK_FALSE(r);
  CHECK(r.reason == ValidityReason::repeated_subword);
  CHECK(r.witness == words({"ATTG"}));
  CHECK(r.culprits == words({"ATTGC", "CATTG"}));

  // TAACG is the complement of ATTGC, so every subword pairs up.
  r = verify_distinguished(CodewordSet(5, 4, words({"ATTGC", "TAACG"})));
  CHECK(r.reason == ValidityReason::complement_pair_subwords);

  r = verify_distinguished(CodewordSet(5, 4, words({"ATTGC", "GCGCA"})));
  CHECK(r.reason == ValidityReason::palindrome_subword);
  CHECK(r.culprits == words({"GCGCA"}));

  CHECK(verify_distinguished(CodewordSet(5, 4)));
}

TEST_CASE("published 40-word set is distinguished") {
  std::ifstream in(testing::data_file("optimal_6_4.txt"));
  std::vector<Word> list;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) list.emplace_back(line);
  REQUIRE(list.size() == 40);
  CHECK(verify_distinguished(CodewordSet(6, 4, list)));
}

TEST_CASE("enumerate_valid_words") {
  const auto s32 = enumerate_valid_words(3, 2);
  CHECK(s32.contains(Word("ACA")));
  CHECK_FALSE(s32.contains(Word("AAT")));
  CHECK(s32.size() == 32);

  const auto s54 = enumerate_valid_words(5, 4);
  CHECK(s54.contains(Word("ATTGC")));
  CHECK(s54.contains(Word("AGTCA")));
  CHECK(s54.contains(Word("TCGTG")));
  CHECK(s54.size() == 896);

  CHECK(enumerate_valid_words(4, 3).size() == 136);
  CHECK(enumerate_valid_words(6, 4).size() == 3328);
  CHECK(enumerate_valid_words(7, 4).size() == 12288);
  CHECK_THROWS_AS(enumerate_valid_words(9, 4), budget_error);

  // The packed scan agrees with is_valid word by word.
  std::size_t n = 0;
  for (kmer::code_t c = 0; c < kmer::count(5); ++c) {
    const Word w(kmer::decode(c, 5));
    if (is_valid(w, 5, 4)) {
      ++n;
      CHECK(s54.contains(w));
    }
  }
  CHECK(n == s54.size());
}

TEST_CASE("packed k-mers") {
  CHECK(kmer::decode(kmer::encode("GATTACA"), 7) == "GATTACA");
  CHECK(kmer::decode(kmer::complement(kmer::encode("ATTGC"), 5), 5) == "TAACG");
  CHECK(kmer::is_palindrome(kmer::encode("GCGC"), 4));
  CHECK_FALSE(kmer::is_palindrome(kmer::encode("AAAA"), 4));
  CHECK(kmer::pair_class(kmer::encode("TTTT"), 4) == kmer::encode("AAAA"));
}
