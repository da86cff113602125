#include "cohere/proof_check.hpp"

#include <algorithm>
#include <set>

#include "cohere/canonical.hpp"
#include "cohere/chordal.hpp"
#include "cohere/coherence_engine.hpp"
#include "cohere/decomposition.hpp"
#include "cohere/group_model.hpp"

namespace cohere {
namespace {

// Indices of ids in g; nullopt on an unknown or repeated id.
std::optional<VertexSet> resolve(const LabeledGraph& g, const IdList& ids) {
  VertexSet out;
  for (const auto& id : ids) {
    auto v = g.index_of(id);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  VertexSet sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return out;
}

std::set<std::string> as_set(const IdList& ids) { return {ids.begin(), ids.end()}; }

std::optional<std::string> key_problem(const LabeledGraph& h, const std::string& key) {
  if (key.empty()) {
    if (h.size() > kDefaultCanonicalCap) return std::nullopt;
    return "missing canonical key";
  }
  if (canonical_key(h, std::max(h.size(), kDefaultCanonicalCap)) != key) return "canonical key mismatch";
  return std::nullopt;
}

bool factors_match(const LabeledGraph& h, const SlenderCertificate& cert,
                   const std::vector<SlenderFactorRecord>& recorded) {
  std::set<std::pair<std::set<std::string>, std::string>> expected, got;
  for (const auto& f : cert.factors) expected.emplace(as_set(ids_of(h, f.vertices)), f.type ? f.type->name() : "abelian");
  for (const auto& f : recorded) got.emplace(as_set(f.vertices), f.type);
  return expected == got && recorded.size() == cert.factors.size();
}

class ProofChecker {
 public:
  explicit ProofChecker(const LabeledGraph& g) : g_(g) {}

  CheckResult node(const ProofNode& n, const std::string& path) const {
    auto vs = resolve(g_, n.vertices);
    if (!vs || vs->empty()) return CheckResult::fail(path, "bad vertex list");
    std::sort(vs->begin(), vs->end());
    const LabeledGraph h = induced_subgraph(g_, *vs);
    if (auto problem = key_problem(h, n.key)) return CheckResult::fail(path, *problem);
    const Flavor f = detect_flavor(h);
    const bool leaf = n.rule != Rule::FreeProduct && n.rule != Rule::Amalgam;
    if (leaf && !n.children.empty()) return CheckResult::fail(path, "leaf rule with children");

    switch (n.rule) {
      case Rule::Abelian:
        if (!f.graph_product || !h.is_complete()) return CheckResult::fail(path, "abelian needs a complete graph product graph");
        return CheckResult::pass();
      case Rule::Slender: {
        if (!f.coxeter && !f.graph_product) return CheckResult::fail(path, "slender rule outside Coxeter or graph product flavor");
        auto cert = is_slender(h);
        if (cert.verdict != Slenderness::Slender) return CheckResult::fail(path, "graph is not slender");
        if (!factors_match(h, cert, n.slender_factors)) return CheckResult::fail(path, "slender factors differ");
        return CheckResult::pass();
      }
      case Rule::Droms:
      case Rule::WiseGordon: {
        if (n.rule == Rule::Droms ? !f.raag() : !f.artin) return CheckResult::fail(path, "flavor mismatch");
        auto order = resolve(h, n.elimination_order);
        if (!order || order->size() != h.size() || !is_perfect_elimination_order(h, *order)) {
          return CheckResult::fail(path, "elimination order is not perfect");
        }
        if (n.rule == Rule::WiseGordon && wise_gordon_violation(h)) {
          return CheckResult::fail(path, "Wise-Gordon condition violated");
        }
        return CheckResult::pass();
      }
      case Rule::McCammondWise:
        if (!mccammond_wise_applies(h)) return CheckResult::fail(path, "some label below the vertex count");
        return CheckResult::pass();
      case Rule::FreeProduct: {
        auto comps = connected_components(h);
        if (comps.size() < 2) return CheckResult::fail(path, "free product of a connected graph");
        if (n.children.size() != comps.size()) return CheckResult::fail(path, "one child per component required");
        std::set<std::set<std::string>> expected, got;
        for (const auto& c : comps) expected.insert(as_set(ids_of(h, c)));
        for (const auto& c : n.children) got.insert(as_set(c.vertices));
        if (expected != got) return CheckResult::fail(path, "children do not match the components");
        return children(n, path);
      }
      case Rule::Amalgam: {
        auto left = resolve(h, n.left);
        auto right = resolve(h, n.right);
        auto sep = resolve(h, n.separator);
        if (!left || !right || !sep || sep->empty()) return CheckResult::fail(path, "bad split vertex lists");
        for (auto* s : {&*left, &*right, &*sep}) std::sort(s->begin(), s->end());
        const Split split{*left, *right, *sep};
        if (!is_valid_split(h, split)) return CheckResult::fail(path, "invalid split");
        if (n.clique_separator && !is_clique(h, *sep)) return CheckResult::fail(path, "separator is not a clique");
        const LabeledGraph s = induced_subgraph(h, *sep);
        auto cert = is_slender(s);
        if (cert.verdict != Slenderness::Slender) return CheckResult::fail(path, "separator is not slender");
        if (!factors_match(s, cert, n.slender_factors)) return CheckResult::fail(path, "separator factors differ");
        if (n.children.size() != 2 || as_set(n.children[0].vertices) != as_set(n.left) ||
            as_set(n.children[1].vertices) != as_set(n.right)) {
          return CheckResult::fail(path, "children must be the left and right sides");
        }
        return children(n, path);
      }
    }
    return CheckResult::fail(path, "unknown rule");
  }

 private:
  CheckResult children(const ProofNode& n, const std::string& path) const {
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      auto r = node(n.children[i], path + "/children[" + std::to_string(i) + "]");
      if (!r) return r;
    }
    return CheckResult::pass();
  }

  const LabeledGraph& g_;
};

CheckResult witness_at(const LabeledGraph& g, const Witness& w, const std::string& path) {
  const Flavor f = detect_flavor(g);
  return std::visit(
      [&](const auto& x) -> CheckResult {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, JoinEmbedding>) {
          auto a = resolve(g, x.side_a);
          auto b = resolve(g, x.side_b);
          if (!a || !b) return CheckResult::fail(path, "bad join sides");
          for (std::size_t u : *a) {
            for (std::size_t v : *b) {
              if (u == v) return CheckResult::fail(path, "join sides overlap");
              if (g.label(u, v) != 2) return CheckResult::fail(path, "cross pair not joined by label 2");
            }
          }
          for (const auto* side : {&*a, &*b}) {
            if (side->size() != 2 && side->size() != 3) return CheckResult::fail(path, "join side must have 2 or 3 vertices");
            const LabeledGraph h = induced_subgraph(g, *side);
            const F2Certificate cert{side->size() == 2 ? F2Certificate::Kind::Pair : F2Certificate::Kind::Triple,
                                     side->size() == 2 ? VertexSet{0, 1} : VertexSet{0, 1, 2}};
            if (!verify_F2_certificate(h, cert)) return CheckResult::fail(path, "join side has no F2 certificate");
          }
          return CheckResult::pass();
        } else if constexpr (std::is_same_v<T, DromsCycle>) {
          auto c = resolve(g, x.cycle);
          if (!f.raag()) return CheckResult::fail(path, "Droms cycle outside a RAAG");
          if (!c || !is_chordless_cycle(g, *c)) return CheckResult::fail(path, "not a chordless cycle of length >= 4");
          return CheckResult::pass();
        } else if constexpr (std::is_same_v<T, WiseGordonViolation>) {
          auto vs = resolve(g, x.vertices);
          if (!f.artin) return CheckResult::fail(path, "Wise-Gordon violation outside an Artin graph");
          if (!vs) return CheckResult::fail(path, "bad vertex list");
          const VertexSet& v = *vs;
          switch (x.kind) {
            case WiseGordonKind::LongCycle:
              if (!is_chordless_cycle(g, v)) return CheckResult::fail(path, "not a chordless cycle of length >= 4");
              return CheckResult::pass();
            case WiseGordonKind::Clique: {
              if ((v.size() != 3 && v.size() != 4) || !is_clique(g, v)) return CheckResult::fail(path, "not a 3- or 4-clique");
              int big = 0;
              for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = i + 1; j < v.size(); ++j) big += g.label(v[i], v[j]) > 2;
              }
              if (big < 2) return CheckResult::fail(path, "clique has fewer than two labels > 2");
              return CheckResult::pass();
            }
            case WiseGordonKind::ForbiddenSquare:
              if (v.size() != 4 || g.label(v[0], v[1]) <= 2 || g.adjacent(v[2], v[3])) {
                return CheckResult::fail(path, "not a forbidden square");
              }
              for (std::size_t s : {v[2], v[3]}) {
                if (g.label(v[0], s) != 2 || g.label(v[1], s) != 2) return CheckResult::fail(path, "not a forbidden square");
              }
              return CheckResult::pass();
          }
          return CheckResult::fail(path, "unknown violation kind");
        } else {
          auto vs = resolve(g, x.vertices);
          if (!vs || vs->empty() || !x.inner) return CheckResult::fail(path, "bad incoherent factor");
          std::sort(vs->begin(), vs->end());
          const LabeledGraph h = induced_subgraph(g, *vs);
          if (auto problem = key_problem(h, x.key)) return CheckResult::fail(path, *problem);
          return witness_at(h, *x.inner, path + "/inner");
        }
      },
      w.value);
}

}  // namespace

CheckResult verify_proof(const LabeledGraph& g, const ProofNode& root) { return ProofChecker(g).node(root, "root"); }

CheckResult check_witness(const LabeledGraph& g, const Witness& w) { return witness_at(g, w, "witness"); }

CheckResult verify_verdict(const LabeledGraph& g, const Verdict& v) {
  switch (v.tag) {
    case VerdictTag::Coherent:
      if (!v.proof) return CheckResult::fail("root", "coherent verdict without proof");
      return verify_proof(g, *v.proof);
    case VerdictTag::Incoherent:
      if (!v.witness) return CheckResult::fail("witness", "incoherent verdict without witness");
      return check_witness(g, *v.witness);
    case VerdictTag::Unknown:
      if (v.notes.empty()) return CheckResult::fail("notes", "unknown verdict without notes");
      return CheckResult::pass();
  }
  return CheckResult::fail("", "bad verdict tag");
}

}  // namespace cohere
