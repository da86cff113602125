#include "cohere/decomposition.hpp"

#include <algorithm>
#include <set>

#include "cohere/chordal.hpp"
#include "cohere/errors.hpp"

namespace cohere {
namespace {

constexpr std::size_t kMaxBipartitionComponents = 6;

VertexSet merged(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Calls visit(combination) for each k-subset of {0..n-1} in lexicographic order.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const VertexSet&)>& visit) {
  if (k > n) return true;
  VertexSet c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(c)) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

bool is_valid_split(const LabeledGraph& g, const Split& s) {
  const std::size_t n = g.size();
  std::vector<int> in_left(n, 0), in_right(n, 0), in_sep(n, 0);
  for (auto [set, mark] : {std::pair{&s.left, &in_left}, {&s.right, &in_right}, {&s.separator, &in_sep}}) {
    for (std::size_t v : *set) {
      if (v >= n || (*mark)[v]) return false;
      (*mark)[v] = 1;
    }
  }
  std::size_t left_size = 0, right_size = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_left[v] && !in_right[v]) return false;
    if ((in_left[v] && in_right[v]) != static_cast<bool>(in_sep[v])) return false;
    left_size += in_left[v];
    right_size += in_right[v];
  }
  if (left_size == n || right_size == n) return false;
  for (std::size_t u = 0; u < n; ++u) {
    if (!in_left[u] || in_sep[u]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_right[v] && !in_sep[v] && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> free_split(const LabeledGraph& g) { return connected_components(g); }

Split dirac_split(const LabeledGraph& g) {
  if (g.is_complete()) throw PreconditionError("dirac_split: graph is complete");
  if (!is_connected(g)) throw PreconditionError("dirac_split: graph is disconnected");
  if (!is_chordal(g).chordal) throw PreconditionError("dirac_split: graph is not chordal");
  const std::size_t n = g.size();
  std::size_t a = 0, b = 0;
  bool found = false;
  for (a = 0; a < n && !found; ++a) {
    for (b = 0; b < n; ++b) {
      if (b != a && !g.adjacent(a, b)) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  // S0 = N(a); keep the members of S0 touching b's component of G - S0.
  std::vector<bool> removed(n, false);
  removed[a] = true;
  for (std::size_t w : g.neighbors(a)) removed[w] = true;
  VertexSet component_b;
  for (auto& comp : components_without(g, removed)) {
    if (std::binary_search(comp.begin(), comp.end(), b)) component_b = std::move(comp);
  }
  Split split;
  for (std::size_t s : g.neighbors(a)) {
    if (std::any_of(component_b.begin(), component_b.end(), [&](std::size_t x) { return g.adjacent(s, x); })) {
      split.separator.push_back(s);
    }
  }
  std::vector<bool> cut(n, false);
  for (std::size_t s : split.separator) cut[s] = true;
  VertexSet component_a;
  for (auto& comp : components_without(g, cut)) {
    if (std::binary_search(comp.begin(), comp.end(), a)) component_a = std::move(comp);
  }
  split.left = merged(split.separator, component_a);
  for (std::size_t v = 0; v < n; ++v) {
    if (!std::binary_search(component_a.begin(), component_a.end(), v)) split.right.push_back(v);
  }
  return split;
}

void for_each_separator_split(const LabeledGraph& g, std::size_t max_separator,
                              const std::function<bool(const Split&)>& visit) {
  const std::size_t n = g.size();
  const std::size_t limit = std::min(max_separator, n == 0 ? 0 : n - 1);
  for (std::size_t k = 1; k <= limit; ++k) {
    bool keep_going = for_each_combination(n, k, [&](const VertexSet& sep) {
      std::vector<bool> removed(n, false);
      for (std::size_t s : sep) removed[s] = true;
      auto comps = components_without(g, removed);
      if (comps.size() < 2) return true;
      std::set<VertexSet> emitted;
      auto emit = [&](const VertexSet& left_part) {
        VertexSet left = merged(sep, left_part);
        if (!emitted.insert(left).second) return true;
        Split split;
        split.separator = sep;
        split.left = std::move(left);
        for (std::size_t v = 0; v < n; ++v) {
          if (!std::binary_search(left_part.begin(), left_part.end(), v)) split.right.push_back(v);
        }
        return visit(split);
      };
      if (comps.size() <= kMaxBipartitionComponents) {
        // Masks with bit 0 set: the group containing the first component.
        const std::size_t c = comps.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << c) - 1; mask += 2) {
          VertexSet part;
          for (std::size_t i = 0; i < c; ++i) {
            if (mask >> i & 1) part = merged(part, comps[i]);
          }
          if (!emit(part)) return false;
        }
      } else {
        for (const auto& comp : comps) {
          if (!emit(comp)) return false;
        }
      }
      return true;
    });
    if (!keep_going) return;
  }
}

std::vector<Split> enumerate_separator_splits(const LabeledGraph& g, std::size_t max_separator) {
  std::vector<Split> out;
  for_each_separator_split(g, max_separator, [&](const Split& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace cohere
