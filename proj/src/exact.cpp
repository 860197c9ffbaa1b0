#include "dnafsm/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dnafsm/bounds.hpp"
#include "dnafsm/error.hpp"

namespace dnafsm {

namespace {

using clock_type = std::chrono::steady_clock;

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const MisOptions& options)
      : g_(g), options_(options), rank_of_(g.size()), start_(clock_type::now()) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
    for (std::size_t r = 0; r < order.size(); ++r) rank_of_[order[r]] = r;
    by_rank_ = std::move(order);
    membership_ = g.min_clique_membership();
    counts_.resize(g.cliques().size());
  }

  MisResult run() {
    seed_greedy();
    if (best_.size() < options_.upper_bound) search(VertexSet::full(g_.size()));

    MisResult result;
    result.vertices = best_;
    std::sort(result.vertices.begin(), result.vertices.end());
    result.budget_exhausted = aborted_;
    result.optimal = best_.size() >= options_.upper_bound || !aborted_;
    result.nodes_explored = nodes_;
    result.elapsed = clock_type::now() - start_;
    return result;
  }

 private:
  bool has_family() const noexcept { return membership_ > 0; }

  void improve(const std::vector<std::size_t>& candidate) {
    if (candidate.size() <= best_.size()) return;
    best_ = candidate;
    if (options_.on_improvement) options_.on_improvement(best_.size());
  }

  // Ascending-degree greedy gives a non-trivial incumbent before branching.
  void seed_greedy() {
    VertexSet free = VertexSet::full(g_.size());
    std::vector<std::size_t> chosen;
    for (auto it = by_rank_.rbegin(); it != by_rank_.rend(); ++it) {
      if (!free.contains(*it)) continue;
      chosen.push_back(*it);
      free.subtract(g_.neighbours(*it));
      free.erase(*it);
    }
    improve(chosen);
  }

  bool should_stop() {
    if (aborted_ || best_.size() >= options_.upper_bound) return true;
    if ((nodes_ & 255) == 0 && clock_type::now() - start_ >= options_.budget) aborted_ = true;
    return aborted_;
  }

  /// Number of cliques in a greedy partition of `p`, stopping once it
  /// exceeds `cap`.
  std::size_t clique_partition_bound(const VertexSet& p, std::size_t cap) const {
    VertexSet rest = p;
    std::size_t cliques = 0;
    for (std::size_t v = rest.first(); v != VertexSet::npos; v = rest.first()) {
      rest.erase(v);
      VertexSet common = rest;
      common &= g_.neighbours(v);
      for (std::size_t u = common.first(); u != VertexSet::npos; u = common.first()) {
        rest.erase(u);
        common.erase(u);
        common &= g_.neighbours(u);
      }
      if (++cliques > cap) break;
    }
    return cliques;
  }

  std::size_t best_ranked(const VertexSet& s) const {
    std::size_t pick = VertexSet::npos;
    s.for_each([&](std::size_t v) {
      if (pick == VertexSet::npos || rank_of_[v] < rank_of_[pick]) pick = v;
    });
    return pick;
  }

  /// Upper bound on the independence number of G[p] and the vertex to branch on.
  std::pair<std::size_t, std::size_t> evaluate(const VertexSet& p) {
    std::size_t bound = p.count();
    // The node is pruned iff bound <= needed.
    const std::size_t needed =
        best_.size() > current_.size() ? best_.size() - current_.size() : 0;

    if (has_family()) {
      std::size_t live = 0;
      std::size_t tightest = VertexSet::npos;
      const auto& cliques = g_.cliques();
      for (std::size_t c = 0; c < cliques.size(); ++c) {
        counts_[c] = p.count_common(cliques[c]);
        if (counts_[c] == 0) continue;
        ++live;
        if (tightest == VertexSet::npos || counts_[c] < counts_[tightest]) tightest = c;
      }
      bound = std::min(bound, live / membership_);
      if (bound <= needed) return {bound, VertexSet::npos};
      VertexSet members = p;
      members &= cliques[tightest];
      const std::size_t v = best_ranked(members);
      if (bound > needed && p.count() <= 128)
        bound = std::min(bound, clique_partition_bound(p, needed));
      return {bound, v};
    }

    if (bound > needed) bound = std::min(bound, clique_partition_bound(p, needed));
    std::size_t v = VertexSet::npos;
    for (std::size_t candidate : by_rank_)
      if (p.contains(candidate)) {
        v = candidate;
        break;
      }
    return {bound, v};
  }

  void search(VertexSet p) {
    while (true) {
      if (should_stop()) return;
      ++nodes_;
      if (p.empty()) {
        improve(current_);
        return;
      }
      const auto [bound, v] = evaluate(p);
      if (current_.size() + bound <= best_.size()) return;

      VertexSet with = p;
      with.subtract(g_.neighbours(v));
      with.erase(v);
      current_.push_back(v);
      search(std::move(with));
      current_.pop_back();

      p.erase(v);
    }
  }

  const Graph& g_;
  const MisOptions& options_;
  std::vector<std::size_t> rank_of_;
  std::vector<std::size_t> by_rank_;
  std::size_t membership_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  clock_type::time_point start_;
};

// Maximum clique of the complement graph, Tomita-style: candidates are
// greedily partitioned into cliques of g (colour classes of the complement)
// and expanded in reverse colour order, cutting when size + colour cannot
// beat the best set seen.
class ColouringOracle {
 public:
  explicit ColouringOracle(const Graph& g) : g_(g) {}

  std::size_t run() {
    expand(0, VertexSet::full(g_.size()));
    return best_;
  }

 private:
  void expand(std::size_t size, VertexSet p) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      const std::size_t v = order[i];
      VertexSet next = p;
      next.subtract(g_.neighbours(v));
      next.erase(v);
      if (next.empty())
        best_ = std::max(best_, size + 1);
      else
        expand(size + 1, std::move(next));
      p.erase(v);
    }
  }

  void colour_sort(const VertexSet& p, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    VertexSet rest = p;
    std::size_t k = 0;
    while (!rest.empty()) {
      ++k;
      VertexSet q = rest;
      while (!q.empty()) {
        const std::size_t v = q.first();
        rest.erase(v);
        q.erase(v);
        q &= g_.neighbours(v);  // stay inside one clique of g
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

}  // namespace

MisResult max_independent_set(const Graph& g, const MisOptions& options) {
  if (options.budget <= seconds_d::zero()) throw argument_error("search budget must be positive");
  return BranchAndBound(g, options).run();
}

std::size_t oracle_mis(const Graph& g, std::size_t limit) {
  if (g.size() > limit)
    throw budget_error("oracle_mis limited to " + std::to_string(limit) + " vertices, got " +
                       std::to_string(g.size()));
  if (g.size() == 0) return 0;
  return ColouringOracle(g).run();
}

ConflictGraph build_full_conflict_graph(std::size_t p, std::size_t l, std::size_t max_p) {
  return build_conflict_graph(enumerate_valid_words(p, l, max_p).words(), l);
}

ExactResult exact_generate(std::size_t p, std::size_t l, seconds_d budget, std::size_t max_p) {
  const auto start = clock_type::now();
  const ConflictGraph cg = build_full_conflict_graph(p, l, max_p);
  const std::uint64_t bound = max_language_size(p, l);

  MisOptions options;
  options.upper_bound = bound;
  options.budget = budget;
  const MisResult mis = max_independent_set(cg.graph, options);

  std::vector<Word> words;
  words.reserve(mis.vertices.size());
  for (auto v : mis.vertices) words.push_back(cg.words[v]);
  ExactResult result{CodewordSet(p, l, std::move(words)), mis.optimal, bound,
                     clock_type::now() - start, mis.nodes_explored};
  if (!verify_distinguished(result.set))
    throw std::logic_error("independent set is not a distinguished language");
  return result;
}

}  // namespace dnafsm
