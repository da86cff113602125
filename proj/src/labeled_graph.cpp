#include "cohere/labeled_graph.hpp"

#include <algorithm>
#include <numeric>

#include "cohere/errors.hpp"

namespace cohere {

LabeledGraph::LabeledGraph(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges) {
  if (vertices.empty()) throw InputError("graph must have at least one vertex");
  ids_.reserve(vertices.size());
  groups_.reserve(vertices.size());
  for (auto& v : vertices) {
    if (v.id.empty()) throw InputError("vertex id must be a non-empty string");
    if (!index_.emplace(v.id, ids_.size()).second) {
      throw InputError("duplicate vertex id '" + v.id + "'");
    }
    ids_.push_back(std::move(v.id));
    groups_.push_back(std::move(v.group));
  }
  const std::size_t n = ids_.size();
  labels_.assign(n * n, 0);
  for (const auto& e : edges) {
    auto u = index_of(e.u);
    auto v = index_of(e.v);
    if (!u) throw InputError("edge references unknown vertex '" + e.u + "'");
    if (!v) throw InputError("edge references unknown vertex '" + e.v + "'");
    if (*u == *v) throw InputError("self-loop at vertex '" + e.u + "'");
    if (e.label < 2) {
      throw InputError("edge label must be >= 2 (edge " + e.u + "-" + e.v + " has label " +
                       std::to_string(e.label) + ")");
    }
    if (labels_[*u * n + *v] != 0) throw InputError("duplicate edge " + e.u + "-" + e.v);
    labels_[*u * n + *v] = e.label;
    labels_[*v * n + *u] = e.label;
    ++edge_count_;
  }
}

std::optional<std::size_t> LabeledGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexSet LabeledGraph::neighbors(std::size_t v) const {
  VertexSet out;
  for (std::size_t w = 0; w < size(); ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

std::size_t LabeledGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < size(); ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.push_back({u, v, label(u, v)});
    }
  }
  return out;
}

bool LabeledGraph::all_labels_two() const {
  return std::all_of(labels_.begin(), labels_.end(), [](int m) { return m == 0 || m == 2; });
}

std::vector<VertexSpec> LabeledGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  for (std::size_t v = 0; v < size(); ++v) out.push_back({ids_[v], groups_[v]});
  return out;
}

std::vector<EdgeSpec> LabeledGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (const auto& e : edges()) out.push_back({ids_[e.u], ids_[e.v], e.label});
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const std::size_t> vertices) {
  if (vertices.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  std::vector<VertexSpec> vs;
  vs.reserve(vertices.size());
  for (std::size_t v : vertices) vs.push_back({g.id(v), g.group(v)});
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (int m = g.label(vertices[i], vertices[j]); m != 0) {
        es.push_back({g.id(vertices[i]), g.id(vertices[j]), m});
      }
    }
  }
  return LabeledGraph(std::move(vs), es);
}

LabeledGraph permuted(const LabeledGraph& g, std::span<const std::size_t> order) {
  if (order.size() != g.size()) throw PreconditionError("permuted: order is not a permutation");
  return induced_subgraph(g, order);
}

LabeledGraph renamed(const LabeledGraph& g, std::vector<std::string> new_ids) {
  if (new_ids.size() != g.size()) throw PreconditionError("renamed: id count mismatch");
  std::vector<VertexSpec> vs;
  for (std::size_t v = 0; v < g.size(); ++v) vs.push_back({std::move(new_ids[v]), g.group(v)});
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) es.push_back({vs[e.u].id, vs[e.v].id, e.label});
  return LabeledGraph(std::move(vs), es);
}

VertexSet indices_of(const LabeledGraph& g, std::span<const std::string> ids) {
  VertexSet out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    auto v = g.index_of(id);
    if (!v) throw PreconditionError("unknown vertex id '" + id + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<std::string> ids_of(const LabeledGraph& g, std::span<const std::size_t> vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (std::size_t v : vertices) out.push_back(g.id(v));
  return out;
}

VertexSet all_vertices(const LabeledGraph& g) {
  VertexSet all(g.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

std::vector<VertexSet> components_without(const LabeledGraph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.size();
  std::vector<bool> seen(removed);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && g.adjacent(comp[head], w)) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const LabeledGraph& g) {
  return components_without(g, std::vector<bool>(g.size(), false));
}

bool is_connected(const LabeledGraph& g) { return connected_components(g).size() == 1; }

bool is_clique(const LabeledGraph& g, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

ShapeClass shape_classify(const LabeledGraph& g) {
  const std::size_t n = g.size();
  const std::size_t m = g.edge_count();
  ShapeClass shape;
  const bool connected = is_connected(g);
  shape.discrete = (m == 0);
  shape.tree = connected && m + 1 == n;
  if (g.is_complete()) {
    shape.tag = ShapeTag::Complete;
    return shape;
  }
  if (shape.discrete) {
    shape.tag = ShapeTag::Discrete;
    return shape;
  }
  std::size_t max_degree = 0;
  bool two_regular = true;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    max_degree = std::max(max_degree, d);
    two_regular = two_regular && d == 2;
  }
  if (shape.tree) {
    shape.tag = max_degree <= 2 ? ShapeTag::Path : ShapeTag::Tree;
    shape.length = shape.tag == ShapeTag::Path ? m : 0;
  } else if (connected && two_regular && n >= 3) {
    shape.tag = ShapeTag::Cycle;
    shape.length = n;
  }
  return shape;
}

std::string to_string(const ShapeClass& shape) {
  switch (shape.tag) {
    case ShapeTag::Discrete: return "Discrete";
    case ShapeTag::Complete: return shape.discrete ? "Complete (Discrete)" : "Complete";
    case ShapeTag::Tree: return "Tree";
    case ShapeTag::Path: return "Path(" + std::to_string(shape.length) + ")";
    case ShapeTag::Cycle: return "Cycle(" + std::to_string(shape.length) + ")";
    case ShapeTag::Other: return "Other";
  }
  return "Other";
}

std::vector<VertexSet> join_factors(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet cls{s};
    seen[s] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      const std::size_t u = cls[head];
      for (std::size_t w = 0; w < n; ++w) {
        if (seen[w] || w == u) continue;
        if (g.label(u, w) != 2) {
          seen[w] = true;
          cls.push_back(w);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace cohere
