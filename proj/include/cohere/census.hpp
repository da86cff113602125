#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cohere/coherence_engine.hpp"
#include "cohere/labeled_graph.hpp"

namespace cohere {

enum class CensusFlavor { Racg, Raag, Coxeter };
std::string to_string(CensusFlavor f);
CensusFlavor census_flavor_from_string(const std::string& s);

inline constexpr std::size_t kCensusMaxVertices = 8;

struct CensusConfig {
  CensusFlavor flavor = CensusFlavor::Racg;
  /// Edge labels for the Coxeter flavor; a missing edge stands for infinity.
  std::vector<int> labels = {2};
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t min_edges = 0;
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
  /// Keep only the first labeled graph of each isomorphism class.
  bool dedup = false;
  std::size_t workers = 1;
  /// JSONL records; empty disables persistence and resume.
  std::string output_path;
  /// Re-check every proof tree and witness.
  bool verify = true;
  EngineConfig engine;
  /// Optional population restriction.
  std::function<bool(const LabeledGraph&)> filter;
};

/// Throws InputError for an invalid config.
void validate(const CensusConfig& config);

/// Every graph of the configured population in deterministic order: by
/// vertex count, then by the mixed-radix code over vertex pairs (0,1), (0,2),
/// ..., (n-2,n-1), first pair most significant. Vertex ids are v0, v1, ...
/// `visit` gets the graph and its record id "n:code"; returning false stops.
void for_each_graph(const CensusConfig& config,
                    const std::function<bool(const LabeledGraph&, const std::string&)>& visit);
std::vector<LabeledGraph> enumerate_graphs(const CensusConfig& config);

struct CensusCell {
  std::size_t coherent = 0;
  std::size_t incoherent = 0;
  std::size_t unknown = 0;
  std::size_t total() const noexcept { return coherent + incoherent + unknown; }
};

using CellIndex = std::pair<std::size_t, std::size_t>;  // (n, e)

struct CensusReport {
  CensusFlavor flavor = CensusFlavor::Racg;
  std::vector<int> labels;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 0;
  std::size_t min_edges = 0;
  std::size_t max_edges = 0;
  bool dedup = false;
  bool filtered = false;

  std::map<CellIndex, CensusCell> cells;
  std::map<CellIndex, std::set<std::string>> incoherent_keys;
  /// Canonical key -> reason codes.
  std::map<std::string, std::set<std::string>> unknown_keys;
  std::map<std::string, CellIndex> unknown_cells;

  std::size_t graphs = 0;
  std::size_t resumed = 0;
  std::size_t verified = 0;
  std::size_t verification_failures = 0;
  std::vector<std::string> failure_details;
  double seconds = 0.0;

  CensusCell totals() const;
};

/// Classifies the population, appends one record per new graph to the
/// output path and skips ids already recorded there. Throws InputError for a
/// bad config and std::runtime_error naming the record on I/O failure.
CensusReport run_census(const CensusConfig& config);

/// Smallest (n, e) in lexicographic order with an incoherent graph, among
/// n <= through_n. Throws PreconditionError if the report does not start at
/// one vertex or stops before through_n.
std::optional<CellIndex> smallest_incoherent(const CensusReport& report);
std::optional<CellIndex> smallest_incoherent(const CensusReport& report, std::size_t through_n);

nlohmann::ordered_json summary_json(const CensusReport& report);
/// "n,e,coherent,incoherent,unknown,total" rows in (n, e) order.
std::string to_csv(const CensusReport& report);
/// Plain-text table with a totals line.
std::string to_table(const CensusReport& report);

}  // namespace cohere
