#pragma once

#include <string>

#include "cohere/labeled_graph.hpp"

namespace cohere {

/// Result of the chordality test. Exactly one piece of evidence is filled:
/// a perfect elimination ordering when chordal, otherwise a chordless cycle
/// of length >= 4 given in cycle order.
struct ChordalityResult {
  bool chordal = false;
  std::vector<std::size_t> elimination_order;
  std::vector<std::size_t> cycle;
};

/// Vertex visit order of lexicographic breadth-first search, ties broken by
/// smallest index.
std::vector<std::size_t> lex_bfs_order(const LabeledGraph& g);

ChordalityResult is_chordal(const LabeledGraph& g);

/// Every vertex's later neighbors in `order` form a clique.
bool is_perfect_elimination_order(const LabeledGraph& g, std::span<const std::size_t> order);

/// Distinct vertices, consecutive ones adjacent (cyclically), all other pairs
/// non-adjacent, length >= 4.
bool is_chordless_cycle(const LabeledGraph& g, std::span<const std::size_t> cycle);

/// Checks whichever evidence the result carries.
bool verify_chordality_evidence(const LabeledGraph& g, const ChordalityResult& result);

}  // namespace cohere
