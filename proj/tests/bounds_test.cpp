#include "doctest.h"

#include "dnafsm/bounds.hpp"
#include "dnafsm/error.hpp"

using namespace dnafsm;

TEST_CASE("palindrome_count") {
  CHECK(palindrome_count(2) == 4);
  CHECK(palindrome_count(4) == 16);
  CHECK(palindrome_count(5) == 64);
  CHECK(palindrome_count(6) == 64);
  CHECK(palindrome_count(1) == 4);
}

TEST_CASE("max_language_size on the reference rows") {
  CHECK(max_language_size(6, 4) == 40);
  CHECK(max_language_size(7, 4) == 30);
  CHECK(max_language_size(7, 5) == 160);
  CHECK(max_language_size(8, 4) == 24);
  CHECK(max_language_size(8, 6) == 672);
  CHECK(max_language_size(9, 4) == 20);
  CHECK(max_language_size(10, 4) == 17);
  CHECK(max_language_size(5, 4) == 60);
}

TEST_CASE("state, symbol and transition counts") {
  CHECK(max_states(6, 4) == 3);
  CHECK(max_states(7, 4) == 4);
  CHECK(max_states(7, 5) == 3);
  CHECK(max_states(8, 4) == 5);
  CHECK(max_states(8, 6) == 3);
  CHECK(max_states(9, 4) == 6);
  CHECK(max_states(10, 4) == 7);
  CHECK(max_states(5, 4) == 2);

  CHECK(max_fsm_symbols(6, 4) == 39);
  CHECK(max_fsm_symbols(7, 4) == 29);
  CHECK(max_fsm_symbols(5, 4) == 59);
  CHECK(max_transitions(6, 4) == 117);
  CHECK(max_transitions(5, 4) == 118);
  CHECK(max_transitions(4, 4) == max_fsm_symbols(4, 4));
}

TEST_CASE("bound report") {
  const auto r = bound_report(6, 4);
  CHECK(r.max_language_size == 40);
  CHECK(r.max_fsm_symbols == r.max_language_size - 1);
  CHECK(r.max_transitions == r.max_fsm_symbols * r.max_states);
  const auto text = format_bound_report(r);
  CHECK(text.find("max_language_size 40") != std::string::npos);
  CHECK_THROWS_AS(bound_report(3, 4), argument_error);
  CHECK_THROWS_AS(bound_report(3, 0), argument_error);
}
