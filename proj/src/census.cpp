#include "cohere/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "cohere/canonical.hpp"
#include "cohere/errors.hpp"
#include "cohere/proof_check.hpp"

namespace cohere {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kBatchSize = 4096;

std::vector<int> edge_alphabet(const CensusConfig& c) {
  if (c.flavor != CensusFlavor::Coxeter) return {2};
  std::vector<int> labels = c.labels;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

AbelianGroupLabel vertex_group(CensusFlavor f) {
  return f == CensusFlavor::Raag ? AbelianGroupLabel::integers() : AbelianGroupLabel::cyclic(2);
}

std::string record_id(std::size_t n, const std::vector<int>& pair_labels) {
  const bool digits = std::all_of(pair_labels.begin(), pair_labels.end(), [](int l) { return l < 10; });
  std::string out = std::to_string(n) + ":";
  for (std::size_t i = 0; i < pair_labels.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(pair_labels[i]);
  }
  return out;
}

struct Item {
  std::string id;
  std::size_t n = 0;
  std::size_t e = 0;
  std::optional<LabeledGraph> graph;
};

struct Outcome {
  std::string key;
  Verdict verdict;
  std::optional<std::string> failure;
};

std::string root_rule(const Verdict& v) {
  if (v.proof) return to_string(v.proof->rule);
  if (v.witness) return to_json(*v.witness).at("kind").get<std::string>();
  return "none";
}

ordered_json make_record(const Item& item, const Outcome& out, CensusFlavor flavor) {
  ordered_json r;
  r["id"] = item.id;
  r["key"] = out.key;
  r["n"] = item.n;
  r["e"] = item.e;
  r["flavor"] = to_string(flavor);
  r["verdict"] = to_string(out.verdict.tag);
  r["rule"] = root_rule(out.verdict);
  if (out.verdict.witness) r["witness"] = to_json(*out.verdict.witness);
  if (!out.verdict.notes.empty()) {
    ordered_json notes = ordered_json::array();
    for (const auto& note : out.verdict.notes) notes.push_back({{"code", note.code}, {"detail", note.detail}});
    r["notes"] = notes;
  }
  return r;
}

void tally(CensusReport& report, std::size_t n, std::size_t e, const std::string& key, const std::string& verdict,
           const std::vector<std::string>& codes) {
  auto& cell = report.cells[{n, e}];
  if (verdict == "COHERENT") {
    ++cell.coherent;
  } else if (verdict == "INCOHERENT") {
    ++cell.incoherent;
    report.incoherent_keys[{n, e}].insert(key);
  } else {
    ++cell.unknown;
    auto& entry = report.unknown_keys[key];
    entry.insert(codes.begin(), codes.end());
    report.unknown_cells[key] = {n, e};
  }
  ++report.graphs;
}

// A torn final line from an interrupted run is cut off so appends start clean.
std::unordered_map<std::string, ordered_json> load_records(const std::string& path) {
  std::unordered_map<std::string, ordered_json> records;
  std::ifstream in(path, std::ios::binary);
  if (!in) return records;
  std::string line;
  std::size_t line_no = 0;
  std::uintmax_t good_end = 0;
  std::optional<std::string> torn;
  while (std::getline(in, line)) {
    ++line_no;
    const bool terminated = !in.eof();
    if (torn) throw std::runtime_error(path + ":" + std::to_string(line_no - 1) + ": bad census record: " + *torn);
    try {
      if (!line.empty()) {
        auto r = ordered_json::parse(line);
        if (!terminated) throw std::runtime_error("unterminated record");
        records.emplace(r.at("id").get<std::string>(), std::move(r));
      }
      good_end += line.size() + 1;
    } catch (const std::exception& ex) {
      torn = ex.what();
    }
  }
  in.close();
  if (torn || good_end < std::filesystem::file_size(path)) std::filesystem::resize_file(path, good_end);
  return records;
}

void classify_batch(std::vector<Item>& items, std::vector<Outcome>& outcomes, const CensusConfig& config,
                    const std::shared_ptr<VerdictCache>& cache) {
  outcomes.assign(items.size(), Outcome{});
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    const CoherenceEngine engine(config.engine, cache);
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        const LabeledGraph& g = *items[i].graph;
        Outcome& out = outcomes[i];
        out.key = canonical_key(g, std::max(g.size(), kDefaultCanonicalCap));
        out.verdict = engine.classify(g);
        if (config.verify) {
          auto check = verify_verdict(g, out.verdict);
          if (!check) out.failure = items[i].id + " at " + check.path + ": " + check.message;
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, items.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string to_string(CensusFlavor f) {
  switch (f) {
    case CensusFlavor::Racg: return "racg";
    case CensusFlavor::Raag: return "raag";
    case CensusFlavor::Coxeter: return "coxeter";
  }
  return "racg";
}

CensusFlavor census_flavor_from_string(const std::string& s) {
  if (s == "racg") return CensusFlavor::Racg;
  if (s == "raag") return CensusFlavor::Raag;
  if (s == "coxeter") return CensusFlavor::Coxeter;
  throw InputError("unknown census flavor '" + s + "' (expected racg, raag or coxeter)");
}

void validate(const CensusConfig& c) {
  if (c.min_vertices < 1) throw InputError("census needs at least one vertex");
  if (c.max_vertices > kCensusMaxVertices) {
    throw InputError("census max vertices " + std::to_string(c.max_vertices) + " exceeds the cap of " +
                     std::to_string(kCensusMaxVertices));
  }
  if (c.min_vertices > c.max_vertices) throw InputError("census min vertices exceeds max vertices");
  if (c.min_edges > c.max_edges) throw InputError("census min edges exceeds max edges");
  if (c.flavor == CensusFlavor::Coxeter) {
    if (c.labels.empty()) throw InputError("coxeter census needs at least one edge label");
    for (int l : c.labels) {
      if (l < 2) throw InputError("edge label must be >= 2, got " + std::to_string(l));
    }
  }
}

void for_each_graph(const CensusConfig& config,
                    const std::function<bool(const LabeledGraph&, const std::string&)>& visit) {
  validate(config);
  const auto alphabet = edge_alphabet(config);
  const std::size_t radix = alphabet.size() + 1;
  const AbelianGroupLabel group = vertex_group(config.flavor);
  std::unordered_set<std::string> seen;

  for (std::size_t n = config.min_vertices; n <= config.max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<VertexSpec> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), group});

    // Odometer over pair digits; digit 0 is "no edge", d > 0 is alphabet[d-1].
    std::vector<std::size_t> digits(pairs.size(), 0);
    std::size_t edges = 0;
    while (true) {
      if (edges >= config.min_edges && edges <= config.max_edges) {
        std::vector<EdgeSpec> edge_specs;
        std::vector<int> code;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          code.push_back(digits[p] == 0 ? 0 : alphabet[digits[p] - 1]);
          if (digits[p] != 0) {
            edge_specs.push_back({vertices[pairs[p].first].id, vertices[pairs[p].second].id, code.back()});
          }
        }
        LabeledGraph g(vertices, edge_specs);
        bool keep = !config.filter || config.filter(g);
        if (keep && config.dedup) keep = seen.insert(canonical_key(g, std::max(n, kDefaultCanonicalCap))).second;
        if (keep && !visit(g, record_id(n, code))) return;
      }
      std::size_t p = pairs.size();
      for (; p > 0; --p) {
        std::size_t& d = digits[p - 1];
        if (d == 0) ++edges;
        if (++d < radix) break;
        d = 0;
        --edges;
      }
      if (p == 0) break;
    }
  }
}

std::vector<LabeledGraph> enumerate_graphs(const CensusConfig& config) {
  std::vector<LabeledGraph> out;
  for_each_graph(config, [&](const LabeledGraph& g, const std::string&) {
    out.push_back(g);
    return true;
  });
  return out;
}

CensusCell CensusReport::totals() const {
  CensusCell t;
  for (const auto& [_, c] : cells) {
    t.coherent += c.coherent;
    t.incoherent += c.incoherent;
    t.unknown += c.unknown;
  }
  return t;
}

CensusReport run_census(const CensusConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  CensusReport report;
  report.flavor = config.flavor;
  report.labels = edge_alphabet(config);
  report.min_vertices = config.min_vertices;
  report.max_vertices = config.max_vertices;
  report.min_edges = config.min_edges;
  report.max_edges = std::min(config.max_edges, config.max_vertices * (config.max_vertices - 1) / 2);
  report.dedup = config.dedup;
  report.filtered = static_cast<bool>(config.filter);

  std::unordered_map<std::string, ordered_json> existing;
  std::ofstream out;
  if (!config.output_path.empty()) {
    existing = load_records(config.output_path);
    out.open(config.output_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open census output " + config.output_path);
  }

  auto cache = std::make_shared<VerdictCache>();
  std::vector<Item> batch;
  std::vector<Outcome> outcomes;

  auto flush = [&] {
    classify_batch(batch, outcomes, config, cache);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Outcome& o = outcomes[i];
      std::vector<std::string> codes;
      for (const auto& note : o.verdict.notes) codes.push_back(note.code);
      tally(report, batch[i].n, batch[i].e, o.key, to_string(o.verdict.tag), codes);
      if (config.verify) {
        ++report.verified;
        if (o.failure) {
          ++report.verification_failures;
          report.failure_details.push_back(*o.failure);
        }
      }
      if (out.is_open()) {
        out << make_record(batch[i], o, config.flavor).dump() << '\n';
        if (!out) throw std::runtime_error("failed to write census record " + batch[i].id);
      }
    }
    if (out.is_open()) {
      out.flush();
      if (!out) throw std::runtime_error("failed to flush census records ending at " + batch.back().id);
    }
    batch.clear();
  };

  for_each_graph(config, [&](const LabeledGraph& g, const std::string& id) {
    if (auto it = existing.find(id); it != existing.end()) {
      const auto& r = it->second;
      std::vector<std::string> codes;
      if (r.contains("notes")) {
        for (const auto& note : r.at("notes")) codes.push_back(note.at("code").get<std::string>());
      }
      tally(report, g.size(), g.edge_count(), r.at("key").get<std::string>(), r.at("verdict").get<std::string>(),
            codes);
      ++report.resumed;
      return true;
    }
    batch.push_back({id, g.size(), g.edge_count(), g});
    if (batch.size() >= kBatchSize) flush();
    return true;
  });
  if (!batch.empty()) flush();

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<CellIndex> smallest_incoherent(const CensusReport& report) {
  return smallest_incoherent(report, report.max_vertices);
}

std::optional<CellIndex> smallest_incoherent(const CensusReport& report, std::size_t through_n) {
  if (report.min_vertices > 1 || through_n > report.max_vertices) {
    throw PreconditionError("census covers " + std::to_string(report.min_vertices) + ".." +
                            std::to_string(report.max_vertices) + " vertices, not 1.." + std::to_string(through_n));
  }
  for (const auto& [cell, counts] : report.cells) {
    if (cell.first > through_n) break;
    if (counts.incoherent > 0) return cell;
  }
  return std::nullopt;
}

ordered_json summary_json(const CensusReport& report) {
  ordered_json j;
  j["flavor"] = to_string(report.flavor);
  j["labels"] = report.labels;
  j["vertices"] = {report.min_vertices, report.max_vertices};
  j["edges"] = {report.min_edges, report.max_edges};
  j["dedup"] = report.dedup;
  j["filtered"] = report.filtered;
  ordered_json cells = ordered_json::array();
  for (const auto& [cell, c] : report.cells) {
    cells.push_back({{"n", cell.first},
                     {"e", cell.second},
                     {"coherent", c.coherent},
                     {"incoherent", c.incoherent},
                     {"unknown", c.unknown},
                     {"total", c.total()}});
  }
  j["cells"] = cells;
  ordered_json incoherent = ordered_json::array();
  for (const auto& [cell, keys] : report.incoherent_keys) {
    incoherent.push_back({{"n", cell.first}, {"e", cell.second}, {"keys", keys}});
  }
  j["incoherent"] = incoherent;
  ordered_json unknown = ordered_json::array();
  for (const auto& [key, codes] : report.unknown_keys) {
    const auto& cell = report.unknown_cells.at(key);
    unknown.push_back({{"key", key}, {"n", cell.first}, {"e", cell.second}, {"codes", codes}});
  }
  j["unknown"] = unknown;
  j["smallest_incoherent"] = nullptr;
  if (report.min_vertices <= 1) {
    if (auto s = smallest_incoherent(report)) j["smallest_incoherent"] = {s->first, s->second};
  }
  j["graphs"] = report.graphs;
  j["resumed"] = report.resumed;
  j["verified"] = report.verified;
  j["verification_failures"] = report.verification_failures;
  j["seconds"] = report.seconds;
  return j;
}

std::string to_csv(const CensusReport& report) {
  std::ostringstream os;
  os << "n,e,coherent,incoherent,unknown,total\n";
  for (const auto& [cell, c] : report.cells) {
    os << cell.first << ',' << cell.second << ',' << c.coherent << ',' << c.incoherent << ',' << c.unknown << ','
       << c.total() << '\n';
  }
  return os.str();
}

std::string to_table(const CensusReport& report) {
  std::ostringstream os;
  auto row = [&](const std::string& n, const std::string& e, const CensusCell& c) {
    os << std::setw(3) << n << std::setw(5) << e << std::setw(11) << c.coherent << std::setw(12) << c.incoherent
       << std::setw(9) << c.unknown << std::setw(9) << c.total() << '\n';
  };
  os << std::setw(3) << "n" << std::setw(5) << "e" << std::setw(11) << "coherent" << std::setw(12) << "incoherent"
     << std::setw(9) << "unknown" << std::setw(9) << "total" << '\n';
  for (const auto& [cell, c] : report.cells) row(std::to_string(cell.first), std::to_string(cell.second), c);
  row("all", "", report.totals());
  return os.str();
}

}  // namespace cohere
