#pragma once

#include <cstddef>
#include <vector>

#include "dnafsm/alphabet.hpp"
#include "dnafsm/vertex_set.hpp"

namespace dnafsm {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// A graph may additionally carry a family of cliques covering it. Every
/// independent set meets each clique at most once, so if each vertex lies in
/// at least k of the cliques the family certifies |IS| <= #cliques / k. The
/// independent-set search uses this when present.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n, VertexSet(n)), degrees_(n, 0), memberships_(n, 0) {}

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;

  /// No-op for an existing edge; self-loops are rejected.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbours(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return degrees_[v]; }

  /// Registers `members` as a clique of the family and adds its edges.
  void add_clique(const std::vector<std::size_t>& members);
  const std::vector<VertexSet>& cliques() const noexcept { return cliques_; }
  /// Minimum number of family cliques containing any vertex (0 without a family).
  std::size_t min_clique_membership() const noexcept;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::size_t> degrees_;
  std::vector<VertexSet> cliques_;
  std::vector<std::size_t> memberships_;
};

/// Words as vertices (lexicographic order), joined when their l-mer plus
/// complement sets intersect. The clique family groups words by shared l-mer
/// class {x, complement(x)}.
struct ConflictGraph {
  std::size_t p = 0;
  std::size_t l = 0;
  std::vector<Word> words;
  Graph graph;

  std::size_t size() const noexcept { return words.size(); }
  bool edgeless() const noexcept { return graph.edge_count() == 0; }
};

/// Throws argument_error on mixed word lengths, duplicates or l out of range.
ConflictGraph build_conflict_graph(std::vector<Word> words, std::size_t l);

}  // namespace dnafsm
