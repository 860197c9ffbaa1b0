#include "doctest.h"

#include "dnafsm/error.hpp"
#include "dnafsm/fsm.hpp"
#include "support.hpp"

using namespace dnafsm;
using nlohmann::json;

TEST_CASE("automaton construction") {
  Fsm f({"a", "b"}, "a", {"b"}, {"0", "1"}, {{"a", "0", "b"}, {"b", "1", "a"}});
  CHECK(f.initial() == "a");
  CHECK(f.state_index("b") == 1);
  CHECK(f.next(0, 0) == 1u);
  CHECK_FALSE(f.next(0, 1).has_value());
  CHECK(f.is_final(1));
  CHECK_FALSE(f.find_symbol("2").has_value());
  CHECK_THROWS_AS(f.symbol_index("2"), argument_error);

  CHECK_THROWS_AS(Fsm({"a", "a"}, "a", {}, {"0"}, {}), argument_error);
  CHECK_THROWS_AS(Fsm({"a"}, "z", {}, {"0"}, {}), argument_error);
  CHECK_THROWS_AS(Fsm({"a"}, "a", {"z"}, {"0"}, {}), argument_error);
  CHECK_THROWS_AS(Fsm({"a"}, "a", {}, {"0"}, {{"a", "1", "a"}}), argument_error);
  CHECK_THROWS_AS(Fsm({"a", "b"}, "a", {}, {"0"}, {{"a", "0", "a"}, {"a", "0", "b"}}),
                  argument_error);
}

TEST_CASE("automaton json round trip") {
  const Fsm f = load_fsm(testing::data_file("div5.json"));
  CHECK(f.states().size() == 5);
  CHECK(f.transitions().size() == 10);
  for (std::size_t s = 0; s < 5; ++s)
    for (std::size_t b = 0; b < 2; ++b) CHECK(f.next(s, b) == (2 * s + b) % 5);
  const Fsm g = Fsm::from_json(f.to_json());
  CHECK(g.to_json() == f.to_json());

  json no_finals = {{"states", {"x"}}, {"initial", "x"}, {"symbols", {"0"}}, {"transitions", json::array()}};
  CHECK_FALSE(Fsm::from_json(no_finals).is_final(0));
  CHECK_THROWS_AS(Fsm::from_json(json{{"states", {"x"}}}), argument_error);
}

TEST_CASE("enzymes") {
  const auto db = load_enzymes(testing::data_file("enzymes.json"));
  REQUIRE(db.size() == 3);
  const auto& b = find_enzyme(db, "BbvI");
  CHECK(b.recognition.str() == "GCAGC");
  CHECK(b.cut_top == 8);
  CHECK(b.overhang() == 4);
  CHECK(find_enzyme(db, "FokI").overhang() == 4);
  CHECK(find_enzyme(db, "Syn12").cut_top == 12);
  CHECK_THROWS_AS(find_enzyme(db, "EcoRI"), argument_error);
  CHECK_THROWS_AS(Enzyme::make("bad", "GCAGC", 8, 8), argument_error);
  CHECK(Enzyme::from_json(b.to_json()).to_json() == b.to_json());
  CHECK_THROWS_AS(parse_enzymes(json::array({b.to_json(), b.to_json()})), argument_error);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(load_fsm("/nonexistent/fsm.json"), io_error);
  CHECK_THROWS_AS(read_json(testing::data_file("optimal_6_4.txt")), argument_error);
}
