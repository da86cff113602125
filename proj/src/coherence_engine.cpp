#include "cohere/coherence_engine.hpp"

#include <algorithm>
#include <map>

#include "cohere/chordal.hpp"
#include "cohere/decomposition.hpp"
#include "cohere/errors.hpp"
#include "cohere/group_model.hpp"

namespace cohere {
namespace {

const char* const kOpenCycleDetail =
    "graph product on a cycle of length >= 5 with finite vertex groups of order >= 3: "
    "hyperbolic, no F2×F2 subgroup, coherence open";

std::vector<SlenderFactorRecord> factor_records(const LabeledGraph& g, const SlenderCertificate& cert) {
  std::vector<SlenderFactorRecord> out;
  for (const auto& f : cert.factors) {
    out.push_back({ids_of(g, f.vertices), f.type ? f.type->name() : "abelian"});
  }
  return out;
}

ProofNode leaf(Rule rule, const LabeledGraph& g, std::string key) {
  ProofNode node;
  node.rule = rule;
  node.key = std::move(key);
  node.vertices = g.ids();
  return node;
}

bool open_cycle_case(const LabeledGraph& g) {
  const auto shape = shape_classify(g);
  if (shape.tag != ShapeTag::Cycle || shape.length < 5 || !g.all_labels_two()) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto order = g.group(v).order();
    if (!order || *order < 3) return false;
  }
  return true;
}

Verdict incoherent_part(const LabeledGraph& g, const VertexSet& part, const Verdict& inner,
                        const std::string& key) {
  return Verdict::incoherent(
      {IncoherentFactor{key, ids_of(g, part), std::make_shared<const Witness>(*inner.witness)}});
}

// Sorts unordered id lists by input position; cycles and squares keep their order.
struct InputOrder {
  const LabeledGraph& g;

  void sort(IdList& ids) const {
    std::sort(ids.begin(), ids.end(),
              [&](const std::string& a, const std::string& b) { return *g.index_of(a) < *g.index_of(b); });
  }

  void node(ProofNode& n) const {
    for (auto* list : {&n.vertices, &n.left, &n.right, &n.separator}) sort(*list);
    for (auto& f : n.slender_factors) sort(f.vertices);
    std::sort(n.slender_factors.begin(), n.slender_factors.end(),
              [&](const SlenderFactorRecord& a, const SlenderFactorRecord& b) {
                return *g.index_of(a.vertices.front()) < *g.index_of(b.vertices.front());
              });
    for (auto& c : n.children) node(c);
    if (n.rule == Rule::FreeProduct) {
      std::sort(n.children.begin(), n.children.end(), [&](const ProofNode& a, const ProofNode& b) {
        return *g.index_of(a.vertices.front()) < *g.index_of(b.vertices.front());
      });
    }
  }

  void witness(Witness& w) const {
    if (auto* j = std::get_if<JoinEmbedding>(&w.value)) {
      sort(j->side_a);
      sort(j->side_b);
    } else if (auto* v = std::get_if<WiseGordonViolation>(&w.value)) {
      if (v->kind == WiseGordonKind::Clique) sort(v->vertices);
    } else if (auto* f = std::get_if<IncoherentFactor>(&w.value)) {
      sort(f->vertices);
      Witness inner = *f->inner;
      witness(inner);
      f->inner = std::make_shared<const Witness>(std::move(inner));
    }
  }
};

}  // namespace

std::optional<Verdict> VerdictCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::insert(const std::string& key, const Verdict& verdict) {
  std::unique_lock lock(mutex_);
  entries_.try_emplace(key, verdict);
}

std::size_t VerdictCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::optional<JoinEmbedding> witness_join_incoherence(const LabeledGraph& g) {
  const std::size_t n = g.size();
  auto try_side = [&](const VertexSet& a) -> std::optional<JoinEmbedding> {
    VertexSet common;
    for (std::size_t w = 0; w < n; ++w) {
      if (std::find(a.begin(), a.end(), w) != a.end()) continue;
      if (std::all_of(a.begin(), a.end(), [&](std::size_t x) { return g.label(x, w) == 2; })) {
        common.push_back(w);
      }
    }
    if (common.size() < 2) return std::nullopt;
    auto cert = contains_F2_certificate(induced_subgraph(g, common));
    if (!cert) return std::nullopt;
    VertexSet b;
    for (std::size_t v : cert->vertices) b.push_back(common[v]);
    return JoinEmbedding{ids_of(g, a), ids_of(g, b)};
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const F2Certificate pair{F2Certificate::Kind::Pair, {u, v}};
      if (!verify_F2_certificate(g, pair)) continue;
      if (auto w = try_side(pair.vertices)) return w;
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (std::size_t x = v + 1; x < n; ++x) {
        if (g.adjacent(u, x) || g.adjacent(v, x)) continue;
        if (auto w = try_side({u, v, x})) return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<WiseGordonViolation> wise_gordon_violation(const LabeledGraph& g) {
  const std::size_t n = g.size();
  if (auto chordal = is_chordal(g); !chordal.chordal) {
    return WiseGordonViolation{WiseGordonKind::LongCycle, ids_of(g, chordal.cycle)};
  }
  auto big_labels = [&](const VertexSet& clique) {
    int count = 0;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) count += g.label(clique[i], clique[j]) > 2;
    }
    return count;
  };
  for (std::size_t size : {3u, 4u}) {
    VertexSet c(size);
    // Lexicographic k-subsets.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + std::min<std::size_t>(size, n), true);
    if (size > n) continue;
    do {
      c.clear();
      for (std::size_t v = 0; v < n; ++v) {
        if (pick[v]) c.push_back(v);
      }
      if (is_clique(g, c) && big_labels(c) >= 2) {
        return WiseGordonViolation{WiseGordonKind::Clique, ids_of(g, c)};
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (const auto& e : g.edges()) {
    if (e.label <= 2) continue;
    VertexSet apex;
    for (std::size_t s = 0; s < n; ++s) {
      if (s != e.u && s != e.v && g.label(e.u, s) == 2 && g.label(e.v, s) == 2) apex.push_back(s);
    }
    for (std::size_t i = 0; i < apex.size(); ++i) {
      for (std::size_t j = i + 1; j < apex.size(); ++j) {
        if (!g.adjacent(apex[i], apex[j])) {
          return WiseGordonViolation{WiseGordonKind::ForbiddenSquare,
                                     ids_of(g, VertexSet{e.u, e.v, apex[i], apex[j]})};
        }
      }
    }
  }
  return std::nullopt;
}

bool mccammond_wise_applies(const LabeledGraph& g) {
  if (!detect_flavor(g).coxeter) return false;
  const auto edges = g.edges();
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return static_cast<std::size_t>(e.label) >= g.size(); });
}

CoherenceEngine::CoherenceEngine(EngineConfig config, std::shared_ptr<VerdictCache> cache)
    : config_(config), cache_(std::move(cache)) {
  if (!cache_) cache_ = std::make_shared<VerdictCache>();
}

std::string CoherenceEngine::key_for(const LabeledGraph& g) const {
  const std::size_t cap = std::max(config_.max_search_vertices, kDefaultCanonicalCap);
  return g.size() <= cap ? canonical_key(g, cap) : std::string();
}

Verdict CoherenceEngine::classify(const LabeledGraph& g) const {
  const Flavor f = detect_flavor(g);
  if (!f.has_group_semantics()) {
    throw InputError("unsupported flavor: edge labels > 2 need every vertex group to be Z or every one Z2");
  }
  if (config_.iff_criteria && f.raag()) {
    auto chordal = is_chordal(g);
    if (!chordal.chordal) return Verdict::incoherent({DromsCycle{ids_of(g, chordal.cycle)}});
    auto node = leaf(Rule::Droms, g, key_for(g));
    node.elimination_order = ids_of(g, chordal.elimination_order);
    return Verdict::coherent(std::move(node));
  }
  if (config_.iff_criteria && f.artin) {
    if (auto violation = wise_gordon_violation(g)) return Verdict::incoherent({*violation});
    auto node = leaf(Rule::WiseGordon, g, key_for(g));
    node.elimination_order = ids_of(g, is_chordal(g).elimination_order);
    return Verdict::coherent(std::move(node));
  }
  if (g.size() > config_.max_search_vertices) return above_cap(g);

  const auto form = canonical_form(g, std::max(config_.max_search_vertices, kDefaultCanonicalCap));
  std::optional<Verdict> verdict;
  if (config_.memoize) verdict = cache_->find(form.key);
  if (!verdict) {
    std::vector<std::string> positions;
    for (std::size_t i = 0; i < g.size(); ++i) positions.push_back(std::to_string(i));
    verdict = solve(renamed(permuted(g, form.order), std::move(positions)), form.key);
    if (config_.memoize) cache_->insert(form.key, *verdict);
  }
  Verdict out = relabel(*verdict, [&](const std::string& position) { return g.id(form.order[std::stoul(position)]); });
  const InputOrder order{g};
  if (out.proof) order.node(*out.proof);
  if (out.witness) order.witness(*out.witness);
  return out;
}

std::optional<Verdict> CoherenceEngine::base_rules(const LabeledGraph& g, const std::string& key) const {
  const Flavor f = detect_flavor(g);
  if (config_.witness_scan) {
    if (auto join = witness_join_incoherence(g)) return Verdict::incoherent({*join});
  }
  if (config_.abelian && f.graph_product && g.is_complete()) return Verdict::coherent(leaf(Rule::Abelian, g, key));
  if (config_.slender && (f.coxeter || f.graph_product)) {
    auto cert = is_slender(g);
    if (cert.verdict == Slenderness::Slender) {
      auto node = leaf(Rule::Slender, g, key);
      node.slender_factors = factor_records(g, cert);
      return Verdict::coherent(std::move(node));
    }
  }
  if (config_.mccammond_wise && mccammond_wise_applies(g)) {
    return Verdict::coherent(leaf(Rule::McCammondWise, g, key));
  }
  return std::nullopt;
}

Verdict CoherenceEngine::above_cap(const LabeledGraph& g) const {
  if (auto v = base_rules(g, key_for(g))) return *v;
  return Verdict::unknown({{"search-cap-exceeded", std::to_string(g.size()) + " vertices exceed the search cap of " +
                                                       std::to_string(config_.max_search_vertices)}});
}

Verdict CoherenceEngine::solve(const LabeledGraph& g, const std::string& key) const {
  if (auto v = base_rules(g, key)) return *v;
  const Flavor f = detect_flavor(g);

  auto components = connected_components(g);
  if (components.size() > 1) {
    if (!config_.free_product) return Verdict::unknown({{"no-rule-applied", "free product rule disabled"}});
    ProofNode node = leaf(Rule::FreeProduct, g, key);
    std::vector<Note> notes;
    for (const auto& comp : components) {
      const auto sub = induced_subgraph(g, comp);
      auto inner = classify(sub);
      if (inner.tag == VerdictTag::Incoherent) return incoherent_part(g, comp, inner, key_for(sub));
      if (inner.tag == VerdictTag::Unknown) {
        notes.push_back({"component-unknown", key_for(sub)});
        notes.insert(notes.end(), inner.notes.begin(), inner.notes.end());
      } else {
        node.children.push_back(std::move(*inner.proof));
      }
    }
    if (!notes.empty()) return Verdict::unknown(std::move(notes));
    return Verdict::coherent(std::move(node));
  }

  // Amalgam over the split; nullopt when a side is not proved coherent.
  std::map<VertexSet, std::optional<SlenderCertificate>> separator_cache;
  auto try_split = [&](const Split& split, bool clique) -> std::optional<Verdict> {
    auto& sep = separator_cache[split.separator];
    if (!sep) sep = is_slender(induced_subgraph(g, split.separator));
    if (sep->verdict != Slenderness::Slender) return std::nullopt;
    ProofNode node = leaf(Rule::Amalgam, g, key);
    node.left = ids_of(g, split.left);
    node.right = ids_of(g, split.right);
    node.separator = ids_of(g, split.separator);
    node.clique_separator = clique;
    node.slender_factors = factor_records(induced_subgraph(g, split.separator), *sep);
    for (const auto* side : {&split.left, &split.right}) {
      const auto sub = induced_subgraph(g, *side);
      auto inner = classify(sub);
      if (inner.tag == VerdictTag::Incoherent) return incoherent_part(g, *side, inner, key_for(sub));
      if (inner.tag == VerdictTag::Unknown) return std::nullopt;
      node.children.push_back(std::move(*inner.proof));
    }
    return Verdict::coherent(std::move(node));
  };

  if (config_.dirac && !g.is_complete() && is_chordal(g).chordal) {
    if (auto v = try_split(dirac_split(g), true)) return *v;
  }
  if (config_.amalgam_search) {
    std::optional<Verdict> found;
    for_each_separator_split(g, g.size() - 1, [&](const Split& split) {
      found = try_split(split, false);
      return !found.has_value();
    });
    if (found) return *found;
  }
  if (f.graph_product && open_cycle_case(g)) return Verdict::unknown({{"paper-open", kOpenCycleDetail}});
  return Verdict::unknown({{"no-rule-applied", "no coherence rule or incoherence witness applies"}});
}

Verdict classify_coherence(const LabeledGraph& g, const EngineConfig& config) {
  return CoherenceEngine(config).classify(g);
}

}  // namespace cohere
