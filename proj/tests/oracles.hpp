// Brute-force reference implementations. They share only the LabeledGraph
// container with the library, never its algorithms.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cohere/coxeter.hpp"
#include "cohere/labeled_graph.hpp"

namespace oracle {

using cohere::AbelianGroupLabel;
using cohere::EdgeSpec;
using cohere::LabeledGraph;
using cohere::VertexSpec;

using EdgeList = std::vector<std::pair<int, int>>;

inline LabeledGraph make_graph(int n, const EdgeList& edges, AbelianGroupLabel group = AbelianGroupLabel::cyclic(2),
                               const std::vector<int>& labels = {}) {
  std::vector<VertexSpec> vs;
  for (int i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), group});
  std::vector<EdgeSpec> es;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    es.push_back({"v" + std::to_string(edges[k].first), "v" + std::to_string(edges[k].second),
                  labels.empty() ? 2 : labels[k]});
  }
  return LabeledGraph(std::move(vs), es);
}

inline LabeledGraph named_graph(const std::vector<std::string>& ids, const std::vector<EdgeSpec>& edges,
                                AbelianGroupLabel group = AbelianGroupLabel::cyclic(2)) {
  std::vector<VertexSpec> vs;
  for (const auto& id : ids) vs.push_back({id, group});
  return LabeledGraph(std::move(vs), edges);
}

inline EdgeList cycle_edges(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return e;
}

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  }
  return p;
}

/// Graph on n vertices from a bitmask over all_pairs(n).
inline LabeledGraph graph_from_mask(int n, std::uint64_t mask, AbelianGroupLabel group = AbelianGroupLabel::cyclic(2)) {
  EdgeList e;
  const auto pairs = all_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask >> k & 1) e.push_back(pairs[k]);
  }
  return make_graph(n, e, group);
}

inline LabeledGraph random_graph(std::mt19937_64& rng, int n, double p,
                                 AbelianGroupLabel group = AbelianGroupLabel::cyclic(2)) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (auto [i, j] : all_pairs(n)) {
    if (coin(rng)) e.emplace_back(i, j);
  }
  return make_graph(n, e, group);
}

/// Random chordal graph: random edges, then fill-in along a random elimination
/// order (each vertex's later neighbors become a clique).
inline LabeledGraph random_chordal(std::mt19937_64& rng, int n, double p) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(p);
  for (auto [i, j] : all_pairs(n)) {
    if (coin(rng)) adj[i][j] = adj[j][i] = true;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v : order) {
    std::vector<int> later;
    for (int w = 0; w < n; ++w) {
      if (adj[v][w] && pos[w] > pos[v]) later.push_back(w);
    }
    for (int a : later) {
      for (int b : later) {
        if (a != b) adj[a][b] = true;
      }
    }
  }
  EdgeList e;
  for (auto [i, j] : all_pairs(n)) {
    if (adj[i][j]) e.emplace_back(i, j);
  }
  return make_graph(n, e);
}

inline std::vector<std::vector<bool>> adjacency(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j);
  }
  return a;
}

/// Induced subgraph on `subset` is a single cycle: connected and 2-regular.
inline bool subset_is_cycle(const std::vector<std::vector<bool>>& a, const std::vector<int>& subset) {
  for (int v : subset) {
    int deg = 0;
    for (int w : subset) deg += a[v][w];
    if (deg != 2) return false;
  }
  std::set<int> seen{subset[0]};
  std::vector<int> stack{subset[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : subset) {
      if (a[v][w] && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == subset.size();
}

/// Some vertex subset of size >= 4 induces a cycle.
inline bool has_long_induced_cycle(const LabeledGraph& g) {
  const int n = static_cast<int>(g.size());
  const auto a = adjacency(g);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    std::vector<int> subset;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) subset.push_back(v);
    }
    if (subset_is_cycle(a, subset)) return true;
  }
  return false;
}

inline bool is_clique(const std::vector<std::vector<bool>>& a, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!a[s[i]][s[j]]) return false;
    }
  }
  return true;
}

/// Adjacency string minimized over all n! vertex permutations; labels are
/// written as characters so labeled graphs compare too.
inline std::string brute_canonical(const LabeledGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i) {
      s += g.group(perm[i]).to_string() + ";";
      for (int j = 0; j < i; ++j) s += static_cast<char>('a' + std::min(g.label(perm[i], perm[j]), 25));
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes of simple graphs on n vertices by Burnside's lemma:
/// average over S_n of 2^(number of cycles the permutation induces on pairs).
inline std::uint64_t burnside_graph_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto pairs = all_pairs(n);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = static_cast<int>(k);
  std::uint64_t total = 0, count = 0;
  do {
    std::vector<bool> visited(pairs.size(), false);
    int cycles = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (visited[k]) continue;
      ++cycles;
      std::size_t cur = k;
      while (!visited[cur]) {
        visited[cur] = true;
        int a = perm[pairs[cur].first], b = perm[pairs[cur].second];
        cur = static_cast<std::size_t>(index[{std::min(a, b), std::max(a, b)}]);
      }
    }
    total += std::uint64_t{1} << cycles;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / count;
}

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

/// Order of the permutation group generated by `gens`, by closure.
inline std::uint64_t closure_order(const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Perm q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Perm transposition(int size, int a, int b) {
  Perm p(size);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

/// A(n): adjacent transpositions of n+1 points.
inline std::vector<Perm> type_a_generators(int n) {
  std::vector<Perm> g;
  for (int i = 0; i < n; ++i) g.push_back(transposition(n + 1, i, i + 1));
  return g;
}

// Signed permutations of n points act on 2n points: i and i+n are +i and -i.
inline Perm signed_swap(int n, int i, int j) {
  Perm p = transposition(2 * n, i, j);
  std::swap(p[i + n], p[j + n]);
  return p;
}

/// B(n): adjacent swaps and the sign change of the first point.
inline std::vector<Perm> type_b_generators(int n) {
  std::vector<Perm> g;
  for (int i = 0; i + 1 < n; ++i) g.push_back(signed_swap(n, i, i + 1));
  g.push_back(transposition(2 * n, 0, n));
  return g;
}

/// D(n): adjacent swaps and the swap of the first two points with both signs flipped.
inline std::vector<Perm> type_d_generators(int n) {
  std::vector<Perm> g;
  for (int i = 0; i + 1 < n; ++i) g.push_back(signed_swap(n, i, i + 1));
  Perm p(2 * n);
  std::iota(p.begin(), p.end(), 0);
  p[0] = n + 1;
  p[n + 1] = 0;
  p[1] = n;
  p[n] = 1;
  g.push_back(p);
  return g;
}

/// I2(m): two reflections of the regular m-gon acting on its vertices.
inline std::vector<Perm> dihedral_generators(int m) {
  Perm r1(m), r2(m);
  for (int i = 0; i < m; ++i) {
    r1[i] = (m - i) % m;
    r2[i] = (m + 1 - i) % m;
  }
  return {r1, r2};
}

/// Eigenvalues of the cosine matrix -cos(pi/m), -1 for infinity, 1 on the diagonal.
inline std::vector<double> cosine_eigenvalues(const cohere::CoxeterMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const int mij = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      b(i, j) = i == j ? 1.0 : mij == cohere::kInfinity ? -1.0 : -std::cos(M_PI / mij);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Every (separator, left) split with separator size <= max_sep, by brute
/// force over vertex subsets: separators leaving >= 2 components, left a
/// union of some components (plus the separator), right the rest.
inline std::set<std::vector<std::size_t>> brute_separators(const LabeledGraph& g, std::size_t max_sep) {
  const std::size_t n = g.size();
  std::set<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_sep) continue;
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if ((mask >> s & 1) || comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = comps;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
          if (!(mask >> w & 1) && comp[w] < 0 && g.adjacent(v, w)) {
            comp[w] = comps;
            stack.push_back(w);
          }
        }
      }
      ++comps;
    }
    if (comps < 2) continue;
    std::vector<std::size_t> sep;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) sep.push_back(v);
    }
    out.insert(sep);
  }
  return out;
}

}  // namespace oracle
