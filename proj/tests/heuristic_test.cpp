#include "doctest.h"

#include "dnafsm/bounds.hpp"
#include "dnafsm/heuristic.hpp"
#include "dnafsm/kmer.hpp"

using namespace dnafsm;

namespace {

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (auto s : list) out.emplace_back(s);
  return out;
}

}  // namespace

TEST_CASE("overlap graph") {
  const auto g = build_overlap_graph(5, 4);
  CHECK(g.vertex_count() == 240);
  CHECK(g.live_count() == 240);
  CHECK(g.is_vertex(Word("ATTG")));
  CHECK_FALSE(g.is_vertex(Word("GCGC")));
  CHECK(g.has_arc(Word("ATTG"), Word("TTGC")));
  CHECK(g.has_arc(Word("ATTG"), Word("TTGA")));
  CHECK_FALSE(g.has_arc(Word("ATTG"), Word("GTTG")));
  for (kmer::code_t v = 0; v < kmer::count(4); ++v) {
    if (!g.is_live(v)) continue;
    CHECK(g.out_degree(v) <= 4);
    CHECK(g.in_degree(v) <= 4);
  }
}

TEST_CASE("path cover words have consecutive overlapping subwords") {
  auto g = build_overlap_graph(5, 4);
  const auto raw = path_cover_stage(g, 5, 4);
  CHECK_FALSE(raw.empty());
  const auto fresh = build_overlap_graph(5, 4);
  for (const auto& w : raw) {
    const auto s = subwords(w, 4);
    REQUIRE(s.size() == 2);
    CHECK(fresh.has_arc(s[0], s[1]));
  }
}

TEST_CASE("path cover regression count at (6,4)") {
  auto g = build_overlap_graph(6, 4);
  CHECK(path_cover_stage(g, 6, 4).size() == 39);
  auto literal = build_overlap_graph(6, 4);
  CHECK(path_cover_stage(literal, 6, 4, PathCoverOptions::literal()).size() == 38);
}

TEST_CASE("single-vertex paths under the literal options") {
  auto g = build_overlap_graph(4, 4);
  const auto raw = path_cover_stage(g, 4, 4, PathCoverOptions::literal());
  CHECK(raw.size() == 240);
}

TEST_CASE("prune_conflicts") {
  auto edgeless = build_conflict_graph(words({"ATTGC", "AGTCA", "TCGTG"}), 4);
  CHECK(prune_conflicts(edgeless).words() == edgeless.words);

  auto pair = build_conflict_graph(words({"ATTGC", "CATTG"}), 4);
  CHECK(prune_conflicts(pair).size() == 1);

  ConflictGraph star{5, 4, words({"AAGCA", "ATTGC", "GCATT", "TCGTG"}), Graph(4)};
  for (std::size_t leaf = 1; leaf < 4; ++leaf) star.graph.add_edge(0, leaf);
  CHECK(prune_conflicts(star).words() == words({"ATTGC", "GCATT", "TCGTG"}));
}

TEST_CASE("heuristic sets are distinguished and near the bound") {
  struct Row {
    std::size_t p, l, at_least;
  };
  for (Row r : {Row{6, 4, 36}, Row{7, 4, 24}, Row{7, 5, 128}, Row{8, 4, 18}, Row{9, 4, 17},
                Row{10, 4, 11}, Row{5, 4, 50}}) {
    CAPTURE(r.p);
    CAPTURE(r.l);
    const auto s = heuristic_generate(r.p, r.l);
    CHECK(verify_distinguished(s));
    CHECK(s.size() >= r.at_least);
    CHECK(s.size() <= max_language_size(r.p, r.l));
  }
}

TEST_CASE("heuristic is deterministic") {
  CHECK(heuristic_generate(7, 5) == heuristic_generate(7, 5));
}
