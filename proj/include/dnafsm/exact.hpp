#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "dnafsm/alphabet.hpp"
#include "dnafsm/conflict_graph.hpp"

namespace dnafsm {

using seconds_d = std::chrono::duration<double>;

inline constexpr std::chrono::seconds default_exact_budget{600};

struct MisOptions {
  /// Search stops as soon as a set of this size is found; such a set is then
  /// reported optimal. Must be a valid upper bound on the independence number.
  std::size_t upper_bound = std::numeric_limits<std::size_t>::max();
  seconds_d budget = default_exact_budget;
  /// Called with the new incumbent size every time it improves.
  std::function<void(std::size_t)> on_improvement;
};

struct MisResult {
  /// Vertex indices in increasing order.
  std::vector<std::size_t> vertices;
  /// Bound reached or search space exhausted.
  bool optimal = false;
  bool budget_exhausted = false;
  std::uint64_t nodes_explored = 0;
  seconds_d elapsed{0};
};

/// Branch and bound on include/exclude decisions.
///
/// Vertices are ranked by descending degree, ties by index. Without a clique
/// family the search branches on the highest-ranked candidate and prunes with
/// a greedy clique partition of the candidates. With a family (see Graph) it
/// branches inside the live clique with the fewest candidates and prunes with
/// the family bound, which turns bound-tight instances into exact-cover
/// searches. On budget exhaustion the best set found so far is returned with
/// optimal = false.
MisResult max_independent_set(const Graph& g, const MisOptions& options = {});

/// Largest graph accepted by oracle_mis.
inline constexpr std::size_t oracle_vertex_limit = 160;

/// Independence number by exhaustive maximum-clique search on the complement
/// graph with a greedy-colouring cut. Written independently of
/// max_independent_set to cross-check it. Throws budget_error above `limit`
/// vertices.
std::size_t oracle_mis(const Graph& g, std::size_t limit = oracle_vertex_limit);

/// Conflict graph over all (p,l)-valid words.
ConflictGraph build_full_conflict_graph(std::size_t p, std::size_t l,
                                        std::size_t max_p = default_enumeration_limit);

struct ExactResult {
  CodewordSet set;
  bool optimal = false;
  std::uint64_t bound = 0;
  seconds_d elapsed{0};
  std::uint64_t nodes_explored = 0;
};

/// Maximum (p,l)-distinguished language by independent-set search, using the
/// capacity bound as both pruning certificate and early exit.
ExactResult exact_generate(std::size_t p, std::size_t l,
                           seconds_d budget = default_exact_budget,
                           std::size_t max_p = default_enumeration_limit);

}  // namespace dnafsm
