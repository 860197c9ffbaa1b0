#include "dnafsm/conflict_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "dnafsm/error.hpp"
#include "dnafsm/kmer.hpp"

namespace dnafsm {

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (auto d : degrees_) total += d;
  return total / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw argument_error("edge endpoint out of range");
  if (u == v) throw argument_error("self-loops are not allowed");
  if (adjacency_[u].contains(v)) return;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++degrees_[u];
  ++degrees_[v];
}

void Graph::add_clique(const std::vector<std::size_t>& members) {
  VertexSet set(size());
  for (auto v : members) {
    if (v >= size()) throw argument_error("clique member out of range");
    set.insert(v);
  }
  set.for_each([&](std::size_t v) { ++memberships_[v]; });
  // Degrees are recomputed in bulk; adding pairwise edges one at a time is
  // quadratic in the clique size for large conflict graphs.
  set.for_each([&](std::size_t v) {
    VertexSet row = set;
    row.erase(v);
    adjacency_[v] |= row;
  });
  set.for_each([&](std::size_t v) { degrees_[v] = adjacency_[v].count(); });
  cliques_.push_back(std::move(set));
}

std::size_t Graph::min_clique_membership() const noexcept {
  if (cliques_.empty() || memberships_.empty()) return 0;
  return *std::min_element(memberships_.begin(), memberships_.end());
}

ConflictGraph build_conflict_graph(std::vector<Word> words, std::size_t l) {
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw argument_error("conflict graph input contains duplicate words");
  const std::size_t p = words.empty() ? l : words.front().size();
  if (l < 1 || l > p || l > kmer::max_length)
    throw argument_error("subword length " + std::to_string(l) + " out of range");
  for (const auto& w : words)
    if (w.size() != p) throw argument_error("conflict graph words must share one length");

  // class code -> words containing an l-mer of that class
  std::map<kmer::code_t, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& s = words[i].str();
    std::vector<kmer::code_t> seen;
    for (std::size_t k = 0; k + l <= p; ++k) {
      const auto cls = kmer::pair_class(kmer::encode(std::string_view(s).substr(k, l)), l);
      if (std::find(seen.begin(), seen.end(), cls) == seen.end()) seen.push_back(cls);
    }
    for (auto cls : seen) by_class[cls].push_back(i);
  }

  ConflictGraph g{p, l, std::move(words), Graph(0)};
  g.graph = Graph(g.words.size());
  for (const auto& [cls, members] : by_class) g.graph.add_clique(members);
  return g;
}

}  // namespace dnafsm
