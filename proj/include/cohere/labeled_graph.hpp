#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cohere/abelian_group.hpp"

namespace cohere {

/// Sorted list of vertex indices into a LabeledGraph.
using VertexSet = std::vector<std::size_t>;

struct VertexSpec {
  std::string id;
  AbelianGroupLabel group;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  int label = 2;
};

struct Edge {
  std::size_t u;
  std::size_t v;
  int label;
};

/// Finite simplicial graph with an abelian group on every vertex and an
/// integer label >= 2 on every edge. A missing edge carries no relation.
/// Immutable after construction.
class LabeledGraph {
 public:
  /// Validates and builds the graph. Throws InputError on an empty vertex
  /// set, duplicate vertex id, self-loop, duplicate edge, edge label < 2 or
  /// unknown vertex reference.
  LabeledGraph(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& id(std::size_t v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const AbelianGroupLabel& group(std::size_t v) const { return groups_[v]; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  /// Edge label, or 0 when u and v are not adjacent (or u == v).
  int label(std::size_t u, std::size_t v) const noexcept { return labels_[u * size() + v]; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return label(u, v) != 0; }
  VertexSet neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept { return 2 * edge_count_ == size() * (size() - 1); }
  bool all_labels_two() const;

  std::vector<VertexSpec> vertex_specs() const;
  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::vector<std::string> ids_;
  std::vector<AbelianGroupLabel> groups_;
  std::vector<int> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t edge_count_ = 0;
};

/// Subgraph on `vertices` with every edge of g between them; ids, groups and
/// labels are kept and vertex order follows `vertices`. Throws
/// PreconditionError on an empty set.
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const std::size_t> vertices);

/// Graph whose i-th vertex is g's vertex order[i].
LabeledGraph permuted(const LabeledGraph& g, std::span<const std::size_t> order);

/// Same graph with vertex i renamed to new_ids[i].
LabeledGraph renamed(const LabeledGraph& g, std::vector<std::string> new_ids);

/// Indices of the given ids; throws PreconditionError for an unknown id.
VertexSet indices_of(const LabeledGraph& g, std::span<const std::string> ids);
std::vector<std::string> ids_of(const LabeledGraph& g, std::span<const std::size_t> vertices);

VertexSet all_vertices(const LabeledGraph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const LabeledGraph& g);
/// Components of g with `removed` deleted.
std::vector<VertexSet> components_without(const LabeledGraph& g, const std::vector<bool>& removed);
bool is_connected(const LabeledGraph& g);
bool is_clique(const LabeledGraph& g, std::span<const std::size_t> vertices);

enum class ShapeTag { Discrete, Complete, Tree, Path, Cycle, Other };

struct ShapeClass {
  ShapeTag tag = ShapeTag::Other;
  /// Number of edges of a Path, number of vertices of a Cycle.
  std::size_t length = 0;
  bool discrete = false;
  bool tree = false;
};

/// Most specific shape. Complete wins over Discrete for a single vertex, and
/// over Path/Cycle for K2/K3; the flags report the weaker properties.
ShapeClass shape_classify(const LabeledGraph& g);
std::string to_string(const ShapeClass& shape);

/// Partition of the vertices into the connected components of the
/// "non-commuting graph" (non-adjacent pairs and pairs with label >= 3).
/// Vertices in different classes are joined by an edge labeled 2, so the
/// group is the direct product of the class parabolics.
std::vector<VertexSet> join_factors(const LabeledGraph& g);

}  // namespace cohere
