#include "cohere/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "cohere/census.hpp"
#include "cohere/chordal.hpp"
#include "cohere/coherence_engine.hpp"
#include "cohere/decomposition.hpp"
#include "cohere/errors.hpp"
#include "cohere/graph_io.hpp"
#include "cohere/group_model.hpp"
#include "cohere/proof_check.hpp"

namespace cohere {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::size_t max_search_vertices = kDefaultCanonicalCap;
  std::string path;

  std::string census_flavor = "racg";
  std::vector<int> labels = {2};
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t min_edges = 0;
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
  bool dedup = false;
  bool no_verify = false;
  std::string out_path;
  std::string csv_path;
  std::string summary_path;
};

std::string braces(const IdList& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
  return s + "}";
}

std::string braces(const LabeledGraph& g, const VertexSet& vs) { return braces(ids_of(g, vs)); }

std::string order_text(const GroupOrder& order) { return order.str(); }

std::string finiteness_text(const LabeledGraph& g) {
  const Finiteness fin = is_finite(g);
  std::string s = fin.finite ? "finite, order " + order_text(*fin.order) : "infinite";
  std::vector<std::string> parts;
  for (const auto& c : fin.components) {
    const auto& t = c.type;
    if (fin.finite) {
      parts.push_back(t.name());
    } else if (t.is_finite()) {
      parts.push_back("finite " + t.name());
    } else if (t.is_affine()) {
      parts.push_back("affine " + t.name());
    } else {
      parts.push_back("indefinite " + braces(g, c.vertices));
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " × " : ", ") + parts[i];
  return s;
}

std::optional<Finiteness> try_finite(const LabeledGraph& g) {
  try {
    return is_finite(g);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

std::string coherent_summary(const LabeledGraph& g, const ProofNode& root) {
  switch (root.rule) {
    case Rule::Abelian: return "abelian";
    case Rule::Slender: {
      auto fin = try_finite(g);
      if (fin && fin->finite) return "slender: finite, order " + order_text(*fin->order);
      std::string s = "slender:";
      for (std::size_t i = 0; i < root.slender_factors.size(); ++i) {
        s += (i ? " × " : " ") + root.slender_factors[i].type;
      }
      return s;
    }
    case Rule::Droms: return "droms: chordal";
    case Rule::WiseGordon: return "wise-gordon";
    case Rule::McCammondWise: return "mccammond-wise: every label >= " + std::to_string(g.size());
    case Rule::FreeProduct: return "free product of " + std::to_string(root.children.size()) + " components";
    case Rule::Amalgam: return "amalgam over " + braces(root.separator);
  }
  return "";
}

std::string witness_summary(const Witness& w) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, JoinEmbedding>) {
          return "F2×F2 join embedding";
        } else if constexpr (std::is_same_v<T, DromsCycle>) {
          return "droms: induced cycle of length " + std::to_string(x.cycle.size());
        } else if constexpr (std::is_same_v<T, WiseGordonViolation>) {
          return "wise-gordon: " + to_string(x.kind);
        } else {
          return "incoherent parabolic subgroup";
        }
      },
      w.value);
}

void print_tree(std::ostream& out, const ProofNode& node, int depth) {
  out << std::string(2 * depth + 2, ' ') << to_string(node.rule) << ' ' << braces(node.vertices);
  if (node.rule == Rule::Amalgam) {
    out << " = " << braces(node.left) << " *_" << braces(node.separator) << ' ' << braces(node.right);
    if (node.clique_separator) out << " (clique)";
  }
  if (!node.slender_factors.empty()) {
    out << " [";
    for (std::size_t i = 0; i < node.slender_factors.size(); ++i) {
      out << (i ? ", " : "") << node.slender_factors[i].type << ' ' << braces(node.slender_factors[i].vertices);
    }
    out << ']';
  }
  out << '\n';
  for (const auto& child : node.children) print_tree(out, child, depth + 1);
}

EngineConfig engine_config(const Options& o) {
  EngineConfig c;
  c.max_search_vertices = o.max_search_vertices;
  return c;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const LabeledGraph g = load_graph(o.path);
  const Flavor flavor = detect_flavor(g);
  const Verdict v = CoherenceEngine(engine_config(o)).classify(g);
  if (auto check = verify_verdict(g, v); !check) {
    throw InternalError("verdict failed re-verification at " + check.path + ": " + check.message);
  }
  const SlenderCertificate slender = is_slender(g);
  const auto fin = try_finite(g);

  if (o.format == "json") {
    ordered_json j = to_json(v);
    j["flavor"] = to_string(flavor);
    j["slenderness"] = {{"verdict", to_string(slender.verdict)}, {"reason", slender.reason}};
    if (fin) {
      j["finiteness"] = {{"finite", fin->finite}};
      if (fin->order) j["finiteness"]["order"] = order_text(*fin->order);
    } else {
      j["finiteness"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  switch (v.tag) {
    case VerdictTag::Coherent:
      out << "COHERENT (" << coherent_summary(g, *v.proof) << ")\n";
      break;
    case VerdictTag::Incoherent:
      out << "INCOHERENT (" << witness_summary(*v.witness) << ")\n";
      out << "witness: " << describe(*v.witness) << '\n';
      break;
    case VerdictTag::Unknown:
      out << "UNKNOWN (" << v.notes.front().code << ": " << v.notes.front().detail << ")\n";
      for (std::size_t i = 1; i < v.notes.size(); ++i) {
        out << "note: " << v.notes[i].code << ": " << v.notes[i].detail << '\n';
      }
      break;
  }
  out << "flavor: " << to_string(flavor) << '\n';
  out << "slender: " << to_string(slender.verdict) << " (" << slender.reason << ")\n";
  out << "finiteness: " << (fin ? finiteness_text(g) : "n/a") << '\n';
  if (v.proof) {
    out << "proof:\n";
    print_tree(out, *v.proof, 0);
  }
  return 0;
}

ordered_json split_json(const LabeledGraph& g, const Split& s) {
  return {{"left", ids_of(g, s.left)}, {"right", ids_of(g, s.right)}, {"separator", ids_of(g, s.separator)}};
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const LabeledGraph g = load_graph(o.path);
  ordered_json j;
  std::ostringstream text;
  const auto comps = free_split(g);
  if (comps.size() > 1) {
    j["kind"] = "free_product";
    ordered_json parts = ordered_json::array();
    for (const auto& c : comps) parts.push_back(ids_of(g, c));
    j["components"] = parts;
    text << "free product:";
    for (std::size_t i = 0; i < comps.size(); ++i) text << (i ? " * " : " ") << braces(g, comps[i]);
    text << '\n';
  } else if (g.is_complete()) {
    j["kind"] = "none";
    text << "no separator: complete graph\n";
  } else if (is_chordal(g).chordal) {
    const Split s = dirac_split(g);
    j["kind"] = "dirac";
    j["split"] = split_json(g, s);
    text << "dirac split: left " << braces(g, s.left) << " right " << braces(g, s.right) << " separator "
         << braces(g, s.separator) << " (clique)\n";
  } else {
    j["kind"] = "slender_separators";
    ordered_json splits = ordered_json::array();
    for_each_separator_split(g, g.size() - 1, [&](const Split& s) {
      if (is_slender(induced_subgraph(g, s.separator)).verdict != Slenderness::Slender) return true;
      splits.push_back(split_json(g, s));
      text << "split: left " << braces(g, s.left) << " right " << braces(g, s.right) << " separator "
           << braces(g, s.separator) << '\n';
      return splits.size() < 5;
    });
    j["splits"] = splits;
    if (splits.empty()) text << "no slender separator\n";
  }
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return 0;
}

int cmd_present(const Options& o, std::ostream& out) {
  const LabeledGraph g = load_graph(o.path);
  const std::string p = emit_presentation(g);
  if (o.format == "json") {
    out << ordered_json{{"presentation", p}}.dump(2) << '\n';
  } else {
    out << p << '\n';
  }
  return 0;
}

int cmd_finiteness(const Options& o, std::ostream& out) {
  const LabeledGraph g = load_graph(o.path);
  if (o.format == "json") {
    const Finiteness fin = is_finite(g);
    ordered_json j{{"finite", fin.finite}, {"order", fin.order ? ordered_json(order_text(*fin.order)) : nullptr}};
    ordered_json comps = ordered_json::array();
    for (const auto& c : fin.components) {
      comps.push_back({{"vertices", ids_of(g, c.vertices)},
                       {"type", c.type.name()},
                       {"class", c.type.is_finite() ? "finite" : c.type.is_affine() ? "affine" : "indefinite"}});
    }
    j["components"] = comps;
    out << j.dump(2) << '\n';
  } else {
    out << finiteness_text(g) << '\n';
  }
  return 0;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  CensusConfig c;
  c.flavor = census_flavor_from_string(o.census_flavor);
  c.labels = o.labels;
  c.min_vertices = o.min_vertices;
  c.max_vertices = o.max_vertices;
  c.min_edges = o.min_edges;
  c.max_edges = o.max_edges;
  c.dedup = o.dedup;
  c.workers = o.workers;
  c.output_path = o.out_path;
  c.verify = !o.no_verify;
  c.engine = engine_config(o);
  const CensusReport report = run_census(c);

  if (!o.csv_path.empty()) {
    std::ofstream csv(o.csv_path);
    csv << to_csv(report);
    if (!csv) throw std::runtime_error("cannot write " + o.csv_path);
  }
  const ordered_json summary = summary_json(report);
  if (!o.summary_path.empty()) {
    std::ofstream s(o.summary_path);
    s << summary.dump(2) << '\n';
    if (!s) throw std::runtime_error("cannot write " + o.summary_path);
  }
  if (o.format == "json") {
    ordered_json j = summary;
    j.erase("seconds");
    out << j.dump(2) << '\n';
  } else {
    out << to_table(report);
    const auto& s = summary["smallest_incoherent"];
    out << "smallest incoherent: "
        << (s.is_null() ? std::string("none")
                        : "(" + std::to_string(s[0].get<std::size_t>()) + ", " +
                              std::to_string(s[1].get<std::size_t>()) + ")")
        << '\n';
    if (c.verify) out << "verified: " << report.verified << ", failures: " << report.verification_failures << '\n';
  }
  if (report.verification_failures > 0) {
    for (const auto& d : report.failure_details) err << "verification failure: " << d << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Coherence, slenderness and finiteness of graph products, Artin and Coxeter groups", "cohere"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", o.workers, "Census worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomized test utilities");
  app.add_option("--max-search-vertices", o.max_search_vertices, "Vertex cap for the amalgam search")
      ->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Coherence verdict with proof tree or witness");
  auto* decompose = app.add_subcommand("decompose", "Free product, Dirac or slender-separator splits");
  auto* present = app.add_subcommand("present", "Group presentation");
  auto* finiteness = app.add_subcommand("finiteness", "Finiteness, order and irreducible components");
  for (auto* sub : {classify, decompose, present, finiteness}) {
    sub->add_option("path", o.path, "Graph file (JSON or DOT)")->required();
  }

  auto* census = app.add_subcommand("census", "Exhaustive small-graph census");
  census->add_option("--flavor", o.census_flavor, "racg, raag or coxeter")
      ->check(CLI::IsMember({"racg", "raag", "coxeter"}));
  census->add_option("--labels", o.labels, "Coxeter edge labels")->delimiter(',');
  census->add_option("--min-vertices", o.min_vertices);
  census->add_option("--max-vertices", o.max_vertices);
  census->add_option("--min-edges", o.min_edges);
  census->add_option("--max-edges", o.max_edges);
  census->add_flag("--dedup", o.dedup, "One graph per isomorphism class");
  census->add_flag("--no-verify", o.no_verify, "Skip proof and witness re-verification");
  census->add_option("--out", o.out_path, "JSONL records (appended, resumable)");
  census->add_option("--csv", o.csv_path, "Per-(n,e) CSV table");
  census->add_option("--summary", o.summary_path, "Summary JSON");

  for (auto* sub : {classify, decompose, present, finiteness, census}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*present) return cmd_present(o, out);
    if (*finiteness) return cmd_finiteness(o, out);
    if (*census) return cmd_census(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace cohere
