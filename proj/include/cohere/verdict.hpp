#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cohere {

using IdList = std::vector<std::string>;

enum class Rule {
  Abelian,        // complete graph product graph: finitely generated abelian
  Slender,        // slender Coxeter group, or direct product of slender coherent factors
  Droms,          // right-angled Artin group on a chordal graph
  WiseGordon,     // Artin group meeting the three Wise-Gordon conditions
  McCammondWise,  // Coxeter graph with every label >= #V
  FreeProduct,    // one child per connected component
  Amalgam,        // two children over a slender separator
};

std::string to_string(Rule r);
Rule rule_from_string(const std::string& s);

struct SlenderFactorRecord {
  IdList vertices;
  /// Irreducible Coxeter type name, or "abelian".
  std::string type;
};

/// One rule application. Vertex references are ids of the classified graph,
/// so every node names the induced subgraph it speaks about.
struct ProofNode {
  Rule rule = Rule::Abelian;
  /// Canonical key of the node's subgraph; empty above the canonical cap.
  std::string key;
  IdList vertices;

  // Amalgam
  IdList left, right, separator;
  bool clique_separator = false;
  // Amalgam separator certificate, or the Slender leaf's own factors
  std::vector<SlenderFactorRecord> slender_factors;
  // Droms / WiseGordon
  IdList elimination_order;

  std::vector<ProofNode> children;
};

/// Induced join of two F2-bearing vertex sets with every cross edge labeled
/// 2: the parabolic on side_a u side_b is a direct product containing F2 x F2.
struct JoinEmbedding {
  IdList side_a;
  IdList side_b;
};

struct DromsCycle {
  IdList cycle;
};

enum class WiseGordonKind { LongCycle, Clique, ForbiddenSquare };
std::string to_string(WiseGordonKind k);

/// Vertices of the violating configuration. ForbiddenSquare lists (x, y, s, t)
/// with x-y labeled > 2, s and t joined to x and y by label 2, s, t non-adjacent.
struct WiseGordonViolation {
  WiseGordonKind kind;
  IdList vertices;
};

struct Witness;

/// An induced subgraph whose group is incoherent; the group of the whole
/// graph contains it as a parabolic subgroup.
struct IncoherentFactor {
  std::string key;
  IdList vertices;
  std::shared_ptr<const Witness> inner;
};

struct Witness {
  std::variant<JoinEmbedding, DromsCycle, WiseGordonViolation, IncoherentFactor> value;
};

struct Note {
  /// "paper-open", "no-rule-applied", "search-cap-exceeded", "component-unknown"
  std::string code;
  std::string detail;

  friend bool operator==(const Note&, const Note&) = default;
};

enum class VerdictTag { Coherent, Incoherent, Unknown };
std::string to_string(VerdictTag t);

struct Verdict {
  VerdictTag tag = VerdictTag::Unknown;
  std::optional<ProofNode> proof;
  std::optional<Witness> witness;
  std::vector<Note> notes;

  static Verdict coherent(ProofNode tree);
  static Verdict incoherent(Witness w);
  static Verdict unknown(std::vector<Note> notes);
};

/// Renames every vertex reference.
Verdict relabel(const Verdict& v, const std::function<std::string(const std::string&)>& rename);

using ordered_json = nlohmann::ordered_json;

/// {"verdict", "rule_trace", "witness", "notes"} in that order.
ordered_json to_json(const Verdict& v);
Verdict verdict_from_json(const ordered_json& j);
ordered_json to_json(const ProofNode& node);
ProofNode proof_from_json(const ordered_json& j);
ordered_json to_json(const Witness& w);
Witness witness_from_json(const ordered_json& j);

/// One-line human summary of a witness, e.g. "join {a,b,c}×{d,e,f}".
std::string describe(const Witness& w);

}  // namespace cohere
