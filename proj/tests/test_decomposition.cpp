#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cohere/chordal.hpp"
#include "cohere/decomposition.hpp"
#include "cohere/errors.hpp"
#include "oracles.hpp"

using namespace cohere;

namespace {

bool no_crossing_edges(const LabeledGraph& g, const Split& s) {
  // The edge set is the union of the edge sets of the two induced sides.
  auto in = [](const VertexSet& set, std::size_t v) { return std::binary_search(set.begin(), set.end(), v); };
  for (const auto& e : g.edges()) {
    const bool left = in(s.left, e.u) && in(s.left, e.v);
    const bool right = in(s.right, e.u) && in(s.right, e.v);
    if (!left && !right) return false;
  }
  return true;
}

bool structurally_valid(const LabeledGraph& g, const Split& s) {
  VertexSet uni, inter;
  std::set_union(s.left.begin(), s.left.end(), s.right.begin(), s.right.end(), std::back_inserter(uni));
  std::set_intersection(s.left.begin(), s.left.end(), s.right.begin(), s.right.end(), std::back_inserter(inter));
  return uni == all_vertices(g) && inter == s.separator && s.left.size() < g.size() && s.right.size() < g.size() &&
         no_crossing_edges(g, s);
}

}  // namespace

TEST_CASE("free split") {
  auto discrete = oracle::make_graph(4, {}, AbelianGroupLabel::integers());
  CHECK(free_split(discrete).size() == 4);
  auto c5 = oracle::make_graph(5, oracle::cycle_edges(5));
  CHECK(free_split(c5) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
  auto triangles = oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(free_split(triangles) == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("dirac split examples") {
  auto path = oracle::make_graph(3, {{0, 1}, {1, 2}});
  auto s = dirac_split(path);
  CHECK(s.separator == VertexSet{1});
  CHECK(s.left == VertexSet{0, 1});
  CHECK(s.right == VertexSet{1, 2});

  // Triangle 0,1,2 with apex 3 over the edge 1-2.
  auto diamond = oracle::make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto d = dirac_split(diamond);
  CHECK(d.separator == VertexSet{1, 2});
  CHECK(d.left == VertexSet{0, 1, 2});
  CHECK(d.right == VertexSet{1, 2, 3});
  CHECK(is_clique(diamond, d.separator));

  CHECK_THROWS_AS(dirac_split(oracle::make_graph(3, oracle::all_pairs(3))), PreconditionError);
  CHECK_THROWS_AS(dirac_split(oracle::make_graph(4, oracle::cycle_edges(4))), PreconditionError);
  CHECK_THROWS_AS(dirac_split(oracle::make_graph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("dirac split on 500 random chordal graphs") {
  std::mt19937_64 rng(1729);
  int splits = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    auto g = oracle::random_chordal(rng, n, 0.35);
    REQUIRE(is_chordal(g).chordal);
    if (g.is_complete() || !is_connected(g)) continue;
    auto s = dirac_split(g);
    REQUIRE(structurally_valid(g, s));
    REQUIRE(is_valid_split(g, s));
    REQUIRE(is_clique(g, s.separator));
    ++splits;
  }
  CHECK(splits > 200);
}

TEST_CASE("separator enumeration matches brute force") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      auto g = oracle::graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      const auto brute = oracle::brute_separators(g, g.size() - 1);
      std::set<VertexSet> seps;
      std::map<VertexSet, std::size_t> per_sep;
      std::set<std::pair<VertexSet, VertexSet>> seen;
      std::size_t last_size = 0;
      for_each_separator_split(g, g.size() - 1, [&](const Split& s) {
        REQUIRE(structurally_valid(g, s));
        REQUIRE(is_valid_split(g, s));
        REQUIRE(s.separator.size() >= last_size);
        last_size = s.separator.size();
        REQUIRE(seen.emplace(s.separator, s.left).second);
        seps.insert(s.separator);
        ++per_sep[s.separator];
        return true;
      });
      REQUIRE(seps == brute);
      REQUIRE(seps.empty() == g.is_complete());
      for (const auto& [sep, count] : per_sep) {
        std::vector<bool> removed(g.size(), false);
        for (auto v : sep) removed[v] = true;
        const auto comps = components_without(g, removed).size();
        REQUIRE(count == (std::size_t{1} << (comps - 1)) - 1);
      }
    }
  }
}

TEST_CASE("separator enumeration examples") {
  auto c4 = oracle::make_graph(4, oracle::cycle_edges(4));
  std::set<VertexSet> seps;
  for (const auto& s : enumerate_separator_splits(c4, 2)) seps.insert(s.separator);
  CHECK(seps == std::set<VertexSet>{{0, 2}, {1, 3}});

  auto k4 = oracle::make_graph(4, oracle::all_pairs(4));
  CHECK(enumerate_separator_splits(k4, 3).empty());

  auto c5 = oracle::make_graph(5, oracle::cycle_edges(5));
  bool found = false;
  for (const auto& s : enumerate_separator_splits(c5, 2)) {
    if (s.separator == VertexSet{0, 2}) {
      found = shape_classify(induced_subgraph(c5, s.left)).tag == ShapeTag::Path &&
              shape_classify(induced_subgraph(c5, s.right)).tag == ShapeTag::Path;
    }
  }
  CHECK(found);

  // Seven components: each one against the rest.
  std::vector<std::pair<int, int>> star;
  for (int i = 1; i <= 7; ++i) star.emplace_back(0, i);
  auto s7 = oracle::make_graph(8, star);
  auto splits = enumerate_separator_splits(s7, 1);
  CHECK(splits.size() == 7);
  for (const auto& s : splits) CHECK(s.left.size() == 2);
}
