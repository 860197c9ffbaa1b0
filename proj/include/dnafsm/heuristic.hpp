#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dnafsm/alphabet.hpp"
#include "dnafsm/conflict_graph.hpp"
#include "dnafsm/kmer.hpp"

namespace dnafsm {

/// Directed overlap graph on the non-palindromic l-mers: an arc u -> v exists
/// iff the last l-1 letters of u equal the first l-1 letters of v. Vertices
/// can be deleted; out-degrees count live out-neighbours only. Self-loops
/// (AAAA -> AAAA) are arcs of the graph but are not counted in out-degrees,
/// since a simple path can never take them.
class OverlapGraph {
 public:
  using code_t = kmer::code_t;

  explicit OverlapGraph(std::size_t l);

  std::size_t l() const noexcept { return l_; }
  /// Number of vertices at construction time.
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t live_count() const noexcept { return live_count_; }

  bool is_vertex(const Word& w) const;
  bool is_live(code_t v) const noexcept { return live_[v]; }
  bool has_arc(const Word& from, const Word& to) const;

  std::size_t out_degree(code_t v) const noexcept { return out_degree_[v]; }
  std::size_t in_degree(code_t v) const noexcept;
  /// Live out-neighbours, self excluded, in increasing code order.
  std::vector<code_t> live_successors(code_t v) const;
  /// Live in-neighbours, self excluded, in increasing code order.
  std::vector<code_t> live_predecessors(code_t v) const;

  void remove(code_t v);

 private:
  std::size_t l_;
  std::size_t vertex_count_ = 0;
  std::size_t live_count_ = 0;
  std::vector<bool> present_;
  std::vector<bool> live_;
  std::vector<std::uint8_t> out_degree_;
};

/// Overlap graph for codewords of length p with l-letter sticky ends.
OverlapGraph build_overlap_graph(std::size_t p, std::size_t l);

/// Knobs of the path-cover stage. `literal()` is the bare greedy: forward
/// growth from a vertex of minimal out-degree, one step at a time, with a
/// degree threshold that only rises. The defaults add four refinements that
/// together lift the yield close to the capacity bound:
struct PathCoverOptions {
  /// Start at the vertex minimising min(in, out) and grow towards its scarcer
  /// side (backwards when the in-degree is the smaller one).
  bool bidirectional = true;
  /// On a dead end, back up and try the next-best neighbour instead of
  /// abandoning the start vertex.
  bool backtrack = true;
  /// Delete the complements of a completed path's l-mers as well, and never
  /// put an l-mer and its complement on the same path.
  bool reserve_complements = true;
  /// Drop the degree threshold back to zero after every completed path.
  bool reset_threshold = true;

  static constexpr PathCoverOptions literal() noexcept { return {false, false, false, false}; }
};

/// Greedy extraction of vertex-disjoint simple paths of p-l+1 vertices. Start
/// vertices are taken by minimal degree not below a threshold that rises by
/// one after each failed extension; each step moves to the live neighbour of
/// minimal degree in the growth direction. Ties go to the lexicographically
/// smallest l-mer. The vertices of every completed path are removed from `g`.
std::vector<Word> path_cover_stage(OverlapGraph& g, std::size_t p, std::size_t l,
                                   const PathCoverOptions& options = {});

/// Deletes a vertex of maximum degree (smallest word on ties) until no edge is
/// left and returns the survivors.
CodewordSet prune_conflicts(const ConflictGraph& g);

/// Path cover, per-word validity filter, conflict pruning. The result always
/// passes verify_distinguished and is a pure function of (p, l).
CodewordSet heuristic_generate(std::size_t p, std::size_t l,
                               const PathCoverOptions& options = {});

}  // namespace dnafsm
