#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>
#include <unordered_map>

#include "cohere/chordal.hpp"
#include "cohere/coherence_engine.hpp"
#include "cohere/errors.hpp"
#include "cohere/proof_check.hpp"
#include "oracles.hpp"

using namespace cohere;

namespace {

const AbelianGroupLabel Z2 = AbelianGroupLabel::cyclic(2);
const AbelianGroupLabel Z3 = AbelianGroupLabel::cyclic(3);
const AbelianGroupLabel Z = AbelianGroupLabel::integers();

LabeledGraph k33() {
  return oracle::make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

LabeledGraph braid_b5() {
  return oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}}, Z, {3, 3, 3, 2, 2, 2});
}

LabeledGraph triangle333() { return oracle::make_graph(3, oracle::all_pairs(3), Z2, {3, 3, 3}); }

void require_sound(const LabeledGraph& g, const Verdict& v) {
  auto r = verify_verdict(g, v);
  INFO(r.path << ": " << r.message);
  REQUIRE(r.ok);
}

std::string dump(const Verdict& v) { return to_json(v).dump(); }

}  // namespace

TEST_CASE("K3,3 RACG is incoherent via a join embedding") {
  auto g = k33();
  auto v = classify_coherence(g);
  REQUIRE(v.tag == VerdictTag::Incoherent);
  auto* j = std::get_if<JoinEmbedding>(&v.witness->value);
  REQUIRE(j);
  CHECK(j->side_a == IdList{"v0", "v1", "v2"});
  CHECK(j->side_b == IdList{"v3", "v4", "v5"});
  require_sound(g, v);
  CHECK(describe(*v.witness) == "join {v0,v1,v2}×{v3,v4,v5}");
}

TEST_CASE("RACG cycles are coherent through a two-vertex slender separator") {
  for (int n = 5; n <= 10; ++n) {
    auto g = oracle::make_graph(n, oracle::cycle_edges(n));
    auto v = classify_coherence(g);
    REQUIRE(v.tag == VerdictTag::Coherent);
    CHECK(v.proof->rule == Rule::Amalgam);
    CHECK(v.proof->separator.size() == 2);
    auto sep = indices_of(g, v.proof->separator);
    CHECK_FALSE(g.adjacent(sep[0], sep[1]));
    require_sound(g, v);
  }
  auto c4 = classify_coherence(oracle::make_graph(4, oracle::cycle_edges(4)));
  REQUIRE(c4.tag == VerdictTag::Coherent);
  CHECK(c4.proof->rule == Rule::Slender);
}

TEST_CASE("named graph product and Artin instances") {
  auto c4 = oracle::make_graph(4, oracle::cycle_edges(4), Z3);
  auto v = classify_coherence(c4);
  REQUIRE(v.tag == VerdictTag::Incoherent);
  auto* j = std::get_if<JoinEmbedding>(&v.witness->value);
  REQUIRE(j);
  CHECK(j->side_a == IdList{"v0", "v2"});
  CHECK(j->side_b == IdList{"v1", "v3"});
  require_sound(c4, v);

  auto raag = oracle::make_graph(5, oracle::cycle_edges(5), Z);
  auto d = classify_coherence(raag);
  REQUIRE(d.tag == VerdictTag::Incoherent);
  CHECK(std::holds_alternative<DromsCycle>(d.witness->value));
  require_sound(raag, d);

  auto c5 = oracle::make_graph(5, oracle::cycle_edges(5), Z3);
  auto u = classify_coherence(c5);
  REQUIRE(u.tag == VerdictTag::Unknown);
  CHECK(u.notes.front().code == "paper-open");

  auto b = braid_b5();
  auto w = classify_coherence(b);
  REQUIRE(w.tag == VerdictTag::Incoherent);
  auto* wg = std::get_if<WiseGordonViolation>(&w.witness->value);
  REQUIRE(wg);
  CHECK(wg->kind == WiseGordonKind::Clique);
  CHECK(wg->vertices.size() == 3);
  require_sound(b, w);
}

TEST_CASE("Wise-Gordon conditions") {
  // Single big label on a chordal graph: coherent.
  auto ok = oracle::make_graph(3, {{0, 1}, {1, 2}}, Z, {5, 2});
  auto v = classify_coherence(ok);
  REQUIRE(v.tag == VerdictTag::Coherent);
  CHECK(v.proof->rule == Rule::WiseGordon);
  require_sound(ok, v);

  // Edge 0-1 labeled 3; 2 and 3 commute with both ends and not with each other.
  auto square = oracle::make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}, Z, {3, 2, 2, 2, 2});
  auto s = wise_gordon_violation(square);
  REQUIRE(s);
  CHECK(s->kind == WiseGordonKind::ForbiddenSquare);
  CHECK(s->vertices == IdList{"v0", "v1", "v2", "v3"});

  auto c4 = oracle::make_graph(4, oracle::cycle_edges(4), Z, {3, 2, 2, 2});
  auto l = wise_gordon_violation(c4);
  REQUIRE(l);
  CHECK(l->kind == WiseGordonKind::LongCycle);
}

TEST_CASE("Coxeter triangle (3,3,3): McCammond-Wise and slenderness agree") {
  auto g = triangle333();
  CHECK(mccammond_wise_applies(g));
  EngineConfig only_mw;
  only_mw.slender = false;
  EngineConfig only_slender;
  only_slender.mccammond_wise = false;
  auto a = classify_coherence(g, only_mw);
  auto b = classify_coherence(g, only_slender);
  REQUIRE(a.tag == VerdictTag::Coherent);
  REQUIRE(b.tag == VerdictTag::Coherent);
  CHECK(a.proof->rule == Rule::McCammondWise);
  CHECK(b.proof->rule == Rule::Slender);
  CHECK(b.proof->slender_factors.front().type == "Ã2");
  require_sound(g, a);
  require_sound(g, b);
  CHECK_FALSE(mccammond_wise_applies(oracle::make_graph(4, oracle::cycle_edges(4), Z2, {3, 3, 3, 3})));
}

TEST_CASE("no join embedding in chordal RACGs on at most 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      auto g = oracle::graph_from_mask(n, mask);
      if (is_chordal(g).chordal) REQUIRE_FALSE(witness_join_incoherence(g));
    }
  }
}

TEST_CASE("unsupported flavor and caps") {
  CHECK_THROWS_AS(classify_coherence(oracle::make_graph(2, {{0, 1}}, Z3, {3})), InputError);
  // Above the cap only the cap-free rules run.
  auto big = oracle::make_graph(14, oracle::cycle_edges(14));
  auto v = classify_coherence(big);
  REQUIRE(v.tag == VerdictTag::Unknown);
  CHECK(v.notes.front().code == "search-cap-exceeded");
  auto raag = classify_coherence(oracle::make_graph(14, oracle::cycle_edges(14), Z));
  CHECK(raag.tag == VerdictTag::Incoherent);
  EngineConfig wide;
  wide.max_search_vertices = 14;
  auto proved = classify_coherence(big, wide);
  REQUIRE(proved.tag == VerdictTag::Coherent);
  require_sound(big, proved);
  auto above = classify_coherence(oracle::make_graph(13, oracle::all_pairs(13)));
  REQUIRE(above.tag == VerdictTag::Coherent);
  CHECK(above.proof->key.empty());
  require_sound(oracle::make_graph(13, oracle::all_pairs(13)), above);
}

TEST_CASE("proof checker rejects tampering") {
  auto c5 = oracle::make_graph(5, oracle::cycle_edges(5));
  auto v = classify_coherence(c5);
  REQUIRE(v.tag == VerdictTag::Coherent);
  require_sound(c5, v);

  auto bad_sep = *v.proof;
  bad_sep.separator = {"v0", "v1"};
  CHECK_FALSE(verify_proof(c5, bad_sep).ok);

  auto dropped = *v.proof;
  dropped.children.pop_back();
  CHECK_FALSE(verify_proof(c5, dropped).ok);

  auto bad_key = *v.proof;
  bad_key.key = "5|Z2*5|0000000000";
  CHECK_FALSE(verify_proof(c5, bad_key).ok);

  // Relabel one edge so the stored tree no longer fits the graph.
  auto relabeled = oracle::make_graph(5, oracle::cycle_edges(5), Z2, {3, 2, 2, 2, 2});
  CHECK_FALSE(verify_proof(relabeled, *v.proof).ok);

  auto child_path = *v.proof;
  child_path.children[1].rule = Rule::Abelian;
  auto r = verify_proof(c5, child_path);
  CHECK_FALSE(r.ok);
  CHECK(r.path == "root/children[1]");
}

TEST_CASE("an amalgam over a non-slender separator is rejected") {
  // Independent triple 0,1,2 separating 3 from 4.
  auto g = oracle::make_graph(5, {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  auto left = induced_subgraph(g, VertexSet{0, 1, 2, 3});
  auto right = induced_subgraph(g, VertexSet{0, 1, 2, 4});
  auto lv = classify_coherence(left);
  auto rv = classify_coherence(right);
  REQUIRE(lv.tag == VerdictTag::Coherent);
  REQUIRE(rv.tag == VerdictTag::Coherent);
  ProofNode node;
  node.rule = Rule::Amalgam;
  node.key = canonical_key(g);
  node.vertices = g.ids();
  node.left = {"v0", "v1", "v2", "v3"};
  node.right = {"v0", "v1", "v2", "v4"};
  node.separator = {"v0", "v1", "v2"};
  node.children = {*lv.proof, *rv.proof};
  auto r = verify_proof(g, node);
  CHECK_FALSE(r.ok);
  CHECK(r.message == "separator is not slender");
}

TEST_CASE("witness checker rejects tampering") {
  auto g = k33();
  auto v = classify_coherence(g);
  auto w = *v.witness;
  std::get<JoinEmbedding>(w.value).side_b = {"v3", "v4", "v0"};
  CHECK_FALSE(check_witness(g, w).ok);

  auto missing_edge = oracle::make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
  CHECK_FALSE(check_witness(missing_edge, *v.witness).ok);
  auto relabeled = oracle::make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, Z2,
                                      {3, 2, 2, 2, 2, 2, 2, 2, 2});
  CHECK_FALSE(check_witness(relabeled, *v.witness).ok);

  auto raag = oracle::make_graph(5, oracle::cycle_edges(5), Z);
  auto d = classify_coherence(raag);
  auto chorded = oracle::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}, Z);
  CHECK_FALSE(check_witness(chorded, *d.witness).ok);

  auto b = braid_b5();
  auto wg = classify_coherence(b);
  auto one_big = oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}}, Z, {3, 2, 3, 2, 2, 2});
  CHECK_FALSE(check_witness(one_big, *wg.witness).ok);
}

TEST_CASE("incoherent components become incoherent factors") {
  // Z-labeled 5-cycle plus an isolated Z3 vertex: a graph product that is no
  // RAAG, whose cycle component is refuted by Droms.
  std::vector<VertexSpec> vs;
  for (int i = 0; i < 5; ++i) vs.push_back({"c" + std::to_string(i), Z});
  vs.push_back({"x", Z3});
  std::vector<EdgeSpec> es;
  for (int i = 0; i < 5; ++i) es.push_back({"c" + std::to_string(i), "c" + std::to_string((i + 1) % 5), 2});
  LabeledGraph g(vs, es);
  auto v = classify_coherence(g);
  REQUIRE(v.tag == VerdictTag::Incoherent);
  auto* f = std::get_if<IncoherentFactor>(&v.witness->value);
  REQUIRE(f);
  CHECK(f->vertices == IdList{"c0", "c1", "c2", "c3", "c4"});
  CHECK(std::holds_alternative<DromsCycle>(f->inner->value));
  require_sound(g, v);

  auto tampered = *v.witness;
  std::get<IncoherentFactor>(tampered.value).vertices = {"c0", "c1", "c2", "c3", "x"};
  CHECK_FALSE(check_witness(g, tampered).ok);
}

TEST_CASE("rule agreement: Droms and the amalgam search on chordal RAAGs") {
  EngineConfig no_iff;
  no_iff.iff_criteria = false;
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      auto g = oracle::graph_from_mask(n, mask, Z);
      if (!is_chordal(g).chordal) continue;
      auto a = classify_coherence(g);
      auto b = classify_coherence(g, no_iff);
      REQUIRE(a.tag == VerdictTag::Coherent);
      REQUIRE(b.tag == VerdictTag::Coherent);
      require_sound(g, b);
    }
  }
}

TEST_CASE("memoization, determinism and relabeling invariance") {
  std::mt19937_64 rng(31337);
  EngineConfig no_memo;
  no_memo.memoize = false;
  CoherenceEngine shared;
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto g = oracle::random_graph(rng, n, 0.5);
    auto a = shared.classify(g);
    auto b = classify_coherence(g, no_memo);
    auto c = shared.classify(g);
    REQUIRE(dump(a) == dump(b));
    REQUIRE(dump(a) == dump(c));
    require_sound(g, a);

    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto p = permuted(g, perm);
    auto d = shared.classify(p);
    REQUIRE(d.tag == a.tag);
    require_sound(p, d);
  }
  CHECK(shared.cache()->size() > 0);
}

TEST_CASE("concurrent classification with a shared cache") {
  auto cache = std::make_shared<VerdictCache>();
  std::vector<LabeledGraph> graphs;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) graphs.push_back(oracle::graph_from_mask(5, mask));
  std::vector<std::string> serial, parallel(graphs.size());
  for (const auto& g : graphs) serial.push_back(dump(classify_coherence(g)));
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      CoherenceEngine engine({}, cache);
      for (std::size_t i = t; i < graphs.size(); i += 4) parallel[i] = dump(engine.classify(graphs[i]));
    });
  }
  for (auto& th : pool) th.join();
  CHECK(serial == parallel);
}

TEST_CASE("incoherence is inherited by supergraphs up to 6 vertices") {
  std::unordered_map<std::string, VerdictTag> tag_of;
  CoherenceEngine engine;
  std::vector<LabeledGraph> coherent;
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      auto g = oracle::graph_from_mask(n, mask);
      auto v = engine.classify(g);
      tag_of[canonical_key(g)] = v.tag;
      if (v.tag == VerdictTag::Coherent) coherent.push_back(g);
    }
  }
  for (const auto& g : coherent) {
    for (std::size_t drop = 0; drop < g.size() && g.size() > 1; ++drop) {
      VertexSet keep;
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (v != drop) keep.push_back(v);
      }
      REQUIRE(tag_of.at(canonical_key(induced_subgraph(g, keep))) != VerdictTag::Incoherent);
    }
  }
}

TEST_CASE("verdict JSON round trip and field order") {
  for (const auto& g : {k33(), oracle::make_graph(6, oracle::cycle_edges(6)), braid_b5(),
                        oracle::make_graph(5, oracle::cycle_edges(5), Z3)}) {
    auto v = classify_coherence(g);
    auto j = to_json(v);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"verdict", "rule_trace", "witness", "notes"});
    auto back = verdict_from_json(ordered_json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    require_sound(g, back);
  }
}

TEST_CASE("random mixed graph products and Artin graphs are sound") {
  std::mt19937_64 rng(4242);
  const std::vector<AbelianGroupLabel> groups = {Z2, Z3, Z, AbelianGroupLabel(0, {2, 2}), AbelianGroupLabel(1, {2})};
  std::size_t decided = 0;
  for (int i = 0; i < 1500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto base = oracle::random_graph(rng, n, 0.5);
    std::vector<VertexSpec> vs = base.vertex_specs();
    std::vector<EdgeSpec> es = base.edge_specs();
    if (i % 2 == 0) {
      for (auto& v : vs) v.group = groups[rng() % groups.size()];
    } else {
      for (auto& v : vs) v.group = Z;
      for (auto& e : es) e.label = 2 + static_cast<int>(rng() % 3);
    }
    LabeledGraph g(vs, es);
    auto v = classify_coherence(g);
    require_sound(g, v);
    decided += v.tag != VerdictTag::Unknown;
  }
  CHECK(decided > 1000);
}
