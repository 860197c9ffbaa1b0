#include "dnafsm/heuristic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dnafsm/error.hpp"

namespace dnafsm {

namespace {

void check_range(std::size_t p, std::size_t l) {
  if (l < 1 || l > p)
    throw argument_error("need 1 <= l <= p, got p=" + std::to_string(p) +
                         " l=" + std::to_string(l));
  if (l > 12) throw argument_error("overlap graph limited to l <= 12");
}

}  // namespace

OverlapGraph::OverlapGraph(std::size_t l)
    : l_(l),
      present_(kmer::count(l), false),
      live_(kmer::count(l), false),
      out_degree_(kmer::count(l), 0) {
  if (l < 1 || l > 12) throw argument_error("overlap graph limited to 1 <= l <= 12");
  const code_t n = kmer::count(l);
  for (code_t v = 0; v < n; ++v) {
    if (kmer::is_palindrome(v, l)) continue;
    present_[v] = live_[v] = true;
    ++vertex_count_;
  }
  live_count_ = vertex_count_;
  for (code_t v = 0; v < n; ++v)
    if (present_[v]) out_degree_[v] = static_cast<std::uint8_t>(live_successors(v).size());
}

bool OverlapGraph::is_vertex(const Word& w) const {
  return w.size() == l_ && present_[kmer::encode(w.str())];
}

bool OverlapGraph::has_arc(const Word& from, const Word& to) const {
  return is_vertex(from) && is_vertex(to) &&
         from.str().substr(1) == to.str().substr(0, l_ - 1);
}

std::size_t OverlapGraph::in_degree(code_t v) const noexcept {
  std::size_t d = 0;
  const code_t base = v >> 2;
  for (code_t x = 0; x < 4; ++x) {
    const code_t u = (x << (2 * (l_ - 1))) | base;
    if (u != v && live_[u]) ++d;
  }
  return d;
}


std::vector<OverlapGraph::code_t> OverlapGraph::live_successors(code_t v) const {
  std::vector<code_t> out;
  const code_t base = (v << 2) & kmer::mask(l_);
  for (code_t x = 0; x < 4; ++x) {
    const code_t w = base | x;
    if (w != v && live_[w]) out.push_back(w);
  }
  return out;
}

std::vector<OverlapGraph::code_t> OverlapGraph::live_predecessors(code_t v) const {
  std::vector<code_t> out;
  const code_t base = v >> 2;
  for (code_t x = 0; x < 4; ++x) {
    const code_t u = (x << (2 * (l_ - 1))) | base;
    if (u != v && live_[u]) out.push_back(u);
  }
  return out;
}

void OverlapGraph::remove(code_t v) {
  if (!live_[v]) return;
  live_[v] = false;
  --live_count_;
  const code_t base = v >> 2;
  for (code_t x = 0; x < 4; ++x) {
    const code_t u = (x << (2 * (l_ - 1))) | base;
    if (u != v && live_[u]) --out_degree_[u];
  }
}

OverlapGraph build_overlap_graph(std::size_t p, std::size_t l) {
  check_range(p, l);
  return OverlapGraph(l);
}

namespace {

using code_t = OverlapGraph::code_t;

class PathBuilder {
 public:
  PathBuilder(const OverlapGraph& g, std::size_t length, const PathCoverOptions& options)
      : g_(g), length_(length), options_(options) {}

  /// Tries to grow a path of `length_` vertices from `start`, forwards or
  /// backwards. The result is always in arc order.
  bool grow(code_t start, bool forward) {
    forward_ = forward;
    path_.assign(1, start);
    if (!extend()) return false;
    if (!forward_) std::reverse(path_.begin(), path_.end());
    return true;
  }

  const std::vector<code_t>& path() const noexcept { return path_; }

 private:
  std::size_t step_degree(code_t v) const {
    return forward_ ? g_.out_degree(v) : g_.in_degree(v);
  }

  bool usable(code_t w) const {
    if (std::find(path_.begin(), path_.end(), w) != path_.end()) return false;
    if (options_.reserve_complements &&
        std::find(path_.begin(), path_.end(), kmer::complement(w, g_.l())) != path_.end())
      return false;
    return true;
  }

  bool extend() {
    if (path_.size() == length_) return true;
    auto next = forward_ ? g_.live_successors(path_.back()) : g_.live_predecessors(path_.back());
    std::erase_if(next, [&](code_t w) { return !usable(w); });
    // Candidates arrive in code order, so the stable sort keeps ties lexicographic.
    std::stable_sort(next.begin(), next.end(),
                     [&](code_t a, code_t b) { return step_degree(a) < step_degree(b); });
    if (!options_.backtrack && next.size() > 1) next.resize(1);
    for (code_t w : next) {
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
    }
    return false;
  }

  const OverlapGraph& g_;
  std::size_t length_;
  const PathCoverOptions& options_;
  bool forward_ = true;
  std::vector<code_t> path_;
};

}  // namespace

std::vector<Word> path_cover_stage(OverlapGraph& g, std::size_t p, std::size_t l,
                                   const PathCoverOptions& options) {
  check_range(p, l);
  if (g.l() != l) throw argument_error("overlap graph built for a different l");
  const code_t n = kmer::count(l);
  const std::size_t path_length = p - l + 1;

  auto start_degree = [&](code_t v) {
    return options.bidirectional ? std::min(g.in_degree(v), g.out_degree(v)) : g.out_degree(v);
  };

  std::vector<Word> emitted;
  PathBuilder builder(g, path_length, options);
  std::size_t threshold = 0;
  while (true) {
    code_t start = n;
    std::size_t best = 0;
    for (code_t v = 0; v < n; ++v) {
      if (!g.is_live(v)) continue;
      const std::size_t d = start_degree(v);
      if (d < threshold) continue;
      if (start == n || d < best) {
        start = v;
        best = d;
      }
    }
    if (start == n) break;

    bool found = false;
    if (options.bidirectional) {
      const bool forward_first = g.in_degree(start) <= g.out_degree(start);
      found = builder.grow(start, forward_first) || builder.grow(start, !forward_first);
    } else {
      found = builder.grow(start, true);
    }
    if (!found) {
      ++threshold;
      continue;
    }

    const auto& path = builder.path();
    std::string word = kmer::decode(path.front(), l);
    for (std::size_t i = 1; i < path.size(); ++i) word.push_back(kmer::letter(path[i] & 3));
    emitted.emplace_back(word);
    for (code_t v : path) g.remove(v);
    if (options.reserve_complements)
      for (code_t v : path) g.remove(kmer::complement(v, l));
    if (options.reset_threshold) threshold = 0;
  }
  return emitted;
}

CodewordSet prune_conflicts(const ConflictGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  VertexSet alive = VertexSet::full(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.graph.degree(v);

  while (true) {
    std::size_t worst = n;
    alive.for_each([&](std::size_t v) {
      if (degree[v] > 0 && (worst == n || degree[v] > degree[worst])) worst = v;
    });
    if (worst == n) break;
    alive.erase(worst);
    g.graph.neighbours(worst).for_each([&](std::size_t u) {
      if (alive.contains(u)) --degree[u];
    });
  }

  std::vector<Word> survivors;
  alive.for_each([&](std::size_t v) { survivors.push_back(g.words[v]); });
  return CodewordSet(g.p, g.l, std::move(survivors));
}

CodewordSet heuristic_generate(std::size_t p, std::size_t l, const PathCoverOptions& options) {
  OverlapGraph g = build_overlap_graph(p, l);
  std::vector<Word> candidates = path_cover_stage(g, p, l, options);
  std::erase_if(candidates, [&](const Word& w) { return !is_valid(w, p, l).valid; });
  if (candidates.empty()) return CodewordSet(p, l);

  CodewordSet result = prune_conflicts(build_conflict_graph(std::move(candidates), l));
  if (!verify_distinguished(result))
    throw std::logic_error("heuristic produced a set that is not distinguished");
  return result;
}

}  // namespace dnafsm
