#pragma once

#include <optional>
#include <string>

#include "cohere/coxeter.hpp"
#include "cohere/labeled_graph.hpp"

namespace cohere {

/// Flavor tags, computed from the labels.
struct Flavor {
  bool graph_product = false;  // every edge label is 2
  bool artin = false;          // every vertex group is Z
  bool coxeter = false;        // every vertex group is Z2

  bool raag() const noexcept { return graph_product && artin; }
  bool racg() const noexcept { return graph_product && coxeter; }
  /// Some group is attached to the graph.
  bool has_group_semantics() const noexcept { return graph_product || artin || coxeter; }

  friend bool operator==(const Flavor&, const Flavor&) = default;
};

Flavor detect_flavor(const LabeledGraph& g);
/// "RACG", "RAAG", "Coxeter", "Artin", "graph product" or "none".
std::string to_string(const Flavor& f);

/// Graph-level evidence that a parabolic subgroup contains a free group of
/// rank 2: a non-adjacent pair (u, v) with (|G_u|-1)(|G_v|-1) >= 2, or three
/// pairwise non-adjacent vertices.
struct F2Certificate {
  enum class Kind { Pair, Triple } kind;
  VertexSet vertices;
};

/// First certificate in lexicographic order (pairs before triples), if any.
/// Absence is not a proof that no free subgroup exists.
std::optional<F2Certificate> contains_F2_certificate(const LabeledGraph& g);
bool verify_F2_certificate(const LabeledGraph& g, const F2Certificate& cert);

enum class Slenderness { Slender, NotSlender, Unknown };
std::string to_string(Slenderness s);

struct SlenderFactor {
  VertexSet vertices;
  /// Set for Coxeter factors; empty for an abelian vertex group.
  std::optional<IrreducibleType> type;
};

struct SlenderCertificate {
  Slenderness verdict = Slenderness::Unknown;
  /// Short machine-readable justification, e.g. "coxeter-finite-affine".
  std::string reason;
  /// Slender: direct factors partitioning the vertex set.
  std::vector<SlenderFactor> factors;
  /// Slender Coxeter factors split as finite and affine irreducibles; for a
  /// right-angled Coxeter group these are n and k in Z2^n x (Z2*Z2)^k.
  std::size_t finite_factors = 0;
  std::size_t affine_factors = 0;
  /// NotSlender: free subgroup evidence when one was found.
  std::optional<F2Certificate> f2;
};

SlenderCertificate is_slender(const LabeledGraph& g);

struct Finiteness {
  bool finite = false;
  std::optional<GroupOrder> order;
  /// Coxeter flavor only.
  std::vector<ComponentType> components;
};

/// Coxeter flavor: finite iff every irreducible component is of finite type.
/// Graph products: finite iff complete with finite vertex groups. Throws
/// InputError otherwise.
Finiteness is_finite(const LabeledGraph& g);

/// One-line presentation "⟨ a, b ∣ a², b², (ab)² ⟩" in input vertex order.
/// Throws InputError for labels > 2 on vertex groups other than Z or Z2.
std::string emit_presentation(const LabeledGraph& g);

}  // namespace cohere
