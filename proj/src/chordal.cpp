#include "cohere/chordal.hpp"

#include <algorithm>
#include <optional>

namespace cohere {
namespace {

// Shortest u-w path avoiding `blocked`; empty when none exists.
std::vector<std::size_t> shortest_path(const LabeledGraph& g, std::size_t u, std::size_t w,
                                       const std::vector<bool>& blocked) {
  const std::size_t n = g.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> queue{u};
  parent[u] = u;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    if (x == w) break;
    for (std::size_t y = 0; y < n; ++y) {
      if (parent[y] == kNone && !blocked[y] && g.adjacent(x, y)) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[w] == kNone) return {};
  std::vector<std::size_t> path{w};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// A chordless cycle through v, u and w (u, w non-adjacent neighbors of v),
// closed by a shortest u-w path outside N[v].
std::vector<std::size_t> cycle_through(const LabeledGraph& g, std::size_t v, std::size_t u,
                                       std::size_t w) {
  std::vector<bool> blocked(g.size(), false);
  blocked[v] = true;
  for (std::size_t x : g.neighbors(v)) blocked[x] = (x != u && x != w);
  auto path = shortest_path(g, u, w, blocked);
  if (path.empty()) return {};
  path.push_back(v);
  return path;
}

std::vector<std::size_t> find_chordless_cycle(const LabeledGraph& g, std::size_t hint_v,
                                              std::size_t hint_u, std::size_t hint_w) {
  if (auto c = cycle_through(g, hint_v, hint_u, hint_w); !c.empty()) return c;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        if (auto c = cycle_through(g, v, nbrs[i], nbrs[j]); !c.empty()) return c;
      }
    }
  }
  return {};
}

}  // namespace

std::vector<std::size_t> lex_bfs_order(const LabeledGraph& g) {
  const std::size_t n = g.size();
  // label[v] holds the (decreasing) visit stamps of v's visited neighbors.
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!best || label[v] > label[*best]) best = v;
    }
    visited[*best] = true;
    order.push_back(*best);
    for (std::size_t w = 0; w < n; ++w) {
      if (!visited[w] && g.adjacent(*best, w)) label[w].push_back(n - step);
    }
  }
  return order;
}

ChordalityResult is_chordal(const LabeledGraph& g) {
  const std::size_t n = g.size();
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  // Tarjan-Yannakakis test: the later neighbors of v, minus the earliest one
  // p, must all be adjacent to p.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = order[i];
    std::vector<std::size_t> later;
    for (std::size_t w : g.neighbors(v)) {
      if (position[w] > i) later.push_back(w);
    }
    if (later.empty()) continue;
    const std::size_t p = *std::min_element(later.begin(), later.end(), [&](auto a, auto b) {
      return position[a] < position[b];
    });
    for (std::size_t w : later) {
      if (w != p && !g.adjacent(w, p)) {
        ChordalityResult result;
        result.cycle = find_chordless_cycle(g, v, p, w);
        return result;
      }
    }
  }
  ChordalityResult result;
  result.chordal = true;
  result.elimination_order = std::move(order);
  return result;
}

bool is_perfect_elimination_order(const LabeledGraph& g, std::span<const std::size_t> order) {
  const std::size_t n = g.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) return false;
    position[order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> later;
    for (std::size_t w : g.neighbors(order[i])) {
      if (position[w] > i) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

bool is_chordless_cycle(const LabeledGraph& g, std::span<const std::size_t> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (cycle[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool verify_chordality_evidence(const LabeledGraph& g, const ChordalityResult& result) {
  return result.chordal ? is_perfect_elimination_order(g, result.elimination_order)
                        : is_chordless_cycle(g, result.cycle);
}

}  // namespace cohere
