#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "cohere/canonical.hpp"
#include "cohere/labeled_graph.hpp"
#include "cohere/verdict.hpp"

namespace cohere {

/// Rule switches and limits. Every rule is on by default; tests switch
/// single rules off to check that independent derivations agree.
struct EngineConfig {
  /// Above this many vertices only the iff-criteria, the witness scan,
  /// slenderness and McCammond-Wise are tried.
  std::size_t max_search_vertices = kDefaultCanonicalCap;
  bool iff_criteria = true;    // Droms for RAAGs, Wise-Gordon for Artin groups
  bool witness_scan = true;    // F2 x F2 join embeddings
  bool abelian = true;         // complete graph product graph
  bool slender = true;         // slender => coherent
  bool mccammond_wise = true;  // Coxeter, every label >= #V
  bool free_product = true;    // recurse on components
  bool dirac = true;           // clique-separator split of a chordal graph
  bool amalgam_search = true;  // any slender separator
  bool memoize = true;
};

/// Verdicts keyed by canonical key, with vertex ids "0".."n-1" naming the
/// canonical positions. Safe for concurrent use; since a verdict is a pure
/// function of the key, racing inserts store identical values.
class VerdictCache {
 public:
  std::optional<Verdict> find(const std::string& key) const;
  void insert(const std::string& key, const Verdict& verdict);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Verdict> entries_;
};

class CoherenceEngine {
 public:
  explicit CoherenceEngine(EngineConfig config = {},
                           std::shared_ptr<VerdictCache> cache = std::make_shared<VerdictCache>());

  /// Throws InputError for a graph without group semantics.
  Verdict classify(const LabeledGraph& g) const;

  const EngineConfig& config() const noexcept { return config_; }
  const std::shared_ptr<VerdictCache>& cache() const noexcept { return cache_; }

 private:
  Verdict solve(const LabeledGraph& g, const std::string& key) const;
  Verdict above_cap(const LabeledGraph& g) const;
  std::optional<Verdict> base_rules(const LabeledGraph& g, const std::string& key) const;
  std::string key_for(const LabeledGraph& g) const;

  EngineConfig config_;
  std::shared_ptr<VerdictCache> cache_;
};

Verdict classify_coherence(const LabeledGraph& g, const EngineConfig& config = {});

/// Disjoint vertex sets A, B (2 or 3 vertices each) carrying F2
/// certificates, with every A-B pair joined by an edge labeled 2. Pairs are
/// tried before triples for A, each in lexicographic order.
std::optional<JoinEmbedding> witness_join_incoherence(const LabeledGraph& g);

/// First violated Wise-Gordon condition of an Artin graph: a chordless cycle
/// of length >= 4, a 3- or 4-clique with two labels > 2, or the forbidden
/// square (an edge labeled > 2 whose ends share two non-adjacent neighbors
/// through label-2 edges).
std::optional<WiseGordonViolation> wise_gordon_violation(const LabeledGraph& g);

bool mccammond_wise_applies(const LabeledGraph& g);

}  // namespace cohere
