#pragma once

#include <string>

#include "cohere/labeled_graph.hpp"

namespace cohere {

inline constexpr std::size_t kDefaultCanonicalCap = 12;

/// Canonical labeling: `key` is equal for two graphs exactly when they are
/// isomorphic by a map preserving vertex groups and edge labels; `order[i]`
/// is the vertex of the input placed at canonical position i.
struct CanonicalForm {
  std::string key;
  std::vector<std::size_t> order;
};

/// Minimizes the serialized label matrix over the leaves of an
/// individualization-refinement search tree. Throws PreconditionError when
/// the graph has more than `cap` vertices.
CanonicalForm canonical_form(const LabeledGraph& g, std::size_t cap = kDefaultCanonicalCap);

std::string canonical_key(const LabeledGraph& g, std::size_t cap = kDefaultCanonicalCap);

}  // namespace cohere
