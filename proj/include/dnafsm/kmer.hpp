#pragma once

// Packed 2-bit encoding of short DNA words (A=0, C=1, G=2, T=3), first letter
// in the most significant position. Numeric order equals lexicographic order
// and the letter-wise complement is a XOR with the all-ones mask.

#include <cstdint>
#include <string>
#include <string_view>

namespace dnafsm::kmer {

using code_t = std::uint32_t;

inline constexpr std::size_t max_length = 16;

constexpr code_t mask(std::size_t l) noexcept {
  return l >= 16 ? ~code_t{0} : (code_t{1} << (2 * l)) - 1;
}

constexpr code_t count(std::size_t l) noexcept { return code_t{1} << (2 * l); }

constexpr int letter_code(char c) noexcept {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

constexpr char letter(code_t v) noexcept { return "ACGT"[v & 3]; }

/// Letter at 0-based position `i` of an l-letter code.
constexpr code_t at(code_t code, std::size_t l, std::size_t i) noexcept {
  return (code >> (2 * (l - 1 - i))) & 3;
}

/// Assumes `s` is uppercase ACGT and at most max_length letters.
inline code_t encode(std::string_view s) noexcept {
  code_t v = 0;
  for (char c : s) v = (v << 2) | static_cast<code_t>(letter_code(c));
  return v;
}

inline std::string decode(code_t code, std::size_t l) {
  std::string s(l, 'A');
  for (std::size_t i = 0; i < l; ++i) s[i] = letter(at(code, l, i));
  return s;
}

constexpr code_t complement(code_t code, std::size_t l) noexcept {
  return code ^ mask(l);
}

/// Watson-Crick palindrome: letter i pairs with letter l-1-i for i < l/2.
constexpr bool is_palindrome(code_t code, std::size_t l) noexcept {
  for (std::size_t i = 0; i < l / 2; ++i) {
    if ((at(code, l, i) ^ 3) != at(code, l, l - 1 - i)) return false;
  }
  return true;
}

/// Canonical representative of {x, complement(x)}: the smaller code.
constexpr code_t pair_class(code_t code, std::size_t l) noexcept {
  code_t c = complement(code, l);
  return c < code ? c : code;
}

}  // namespace dnafsm::kmer
