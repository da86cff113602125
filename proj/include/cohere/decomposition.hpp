#pragma once

#include <functional>

#include "cohere/labeled_graph.hpp"

namespace cohere {

/// Two induced sides covering the graph and meeting in `separator`, with no
/// edge between left\separator and right\separator. The group of the graph
/// is then the amalgam of the side groups over the separator group.
struct Split {
  VertexSet left;
  VertexSet right;
  VertexSet separator;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Union, intersection, properness and no-crossing-edge checks.
bool is_valid_split(const LabeledGraph& g, const Split& split);

/// Connected components; the group is the free product of their groups.
std::vector<VertexSet> free_split(const LabeledGraph& g);

/// Clique-separator split of a connected, non-complete, chordal graph: a
/// minimal separator between the first non-adjacent pair. Throws
/// PreconditionError when the input is complete, disconnected or not chordal.
Split dirac_split(const LabeledGraph& g);

/// Visits every split of a connected graph whose separator has at most
/// `max_separator` vertices and disconnects it. Separators come in ascending
/// size, then lexicographic order. For each separator with at most six
/// components every bipartition of the components is produced (the side
/// holding the first component goes left); with more components only each
/// single component against the rest. `visit` returns false to stop.
void for_each_separator_split(const LabeledGraph& g, std::size_t max_separator,
                              const std::function<bool(const Split&)>& visit);

std::vector<Split> enumerate_separator_splits(const LabeledGraph& g, std::size_t max_separator);

}  // namespace cohere
