#pragma once

#include <string>

#include "cohere/labeled_graph.hpp"
#include "cohere/verdict.hpp"

namespace cohere {

struct CheckResult {
  bool ok = true;
  /// Location of the first failure, e.g. "root/children[1]" or "witness/inner".
  std::string path;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string path, std::string message) { return {false, std::move(path), std::move(message)}; }
};

/// Re-checks every rule premise on recomputed induced subgraphs of g.
CheckResult verify_proof(const LabeledGraph& g, const ProofNode& root);

/// Structural check of an incoherence witness against g.
CheckResult check_witness(const LabeledGraph& g, const Witness& w);

/// Coherent needs a verified tree, Incoherent a valid witness, Unknown at
/// least one note.
CheckResult verify_verdict(const LabeledGraph& g, const Verdict& v);

}  // namespace cohere
