#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cohere/cli.hpp"
#include "cohere/verdict.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cohere");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cohere::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string graph(const std::string& name) { return (fs::path(COHERE_SOURCE_DIR) / "graphs" / name).string(); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / ("cohere_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("classify: named instances") {
  auto k33 = cli({"classify", graph("k33_racg.json")});
  CHECK(k33.code == 0);
  CHECK(starts_with(k33.out, "INCOHERENT ("));
  CHECK(k33.out.find("witness: join {a,b,c}×{d,e,f}") != std::string::npos);

  auto sym5 = cli({"classify", graph("sym5.json")});
  CHECK(sym5.code == 0);
  CHECK(starts_with(sym5.out, "COHERENT (slender: finite, order 120)"));

  auto c5 = cli({"classify", graph("c5_z3.json")});
  CHECK(c5.code == 0);
  CHECK(starts_with(c5.out, "UNKNOWN (paper-open: "));

  auto c6 = cli({"classify", graph("c6_racg.json")});
  CHECK(starts_with(c6.out, "COHERENT (amalgam over {1,3})"));
  CHECK(c6.out.find("proof:\n") != std::string::npos);
}

TEST_CASE("classify: JSON output round-trips and is byte-stable") {
  auto a = cli({"--format", "json", "classify", graph("c6_racg.json")});
  auto b = cli({"classify", graph("c6_racg.json"), "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = cohere::ordered_json::parse(a.out);
  CHECK(j["verdict"] == "COHERENT");
  CHECK(j["flavor"] == "RACG");
  auto v = cohere::verdict_from_json(j);
  CHECK(cohere::to_json(v)["rule_trace"] == j["rule_trace"]);
}

TEST_CASE("decompose, present, finiteness") {
  auto path = cli({"decompose", graph("path_abc.dot")});
  CHECK(path.code == 0);
  CHECK(path.out == "dirac split: left {a,b} right {b,c} separator {b} (clique)\n");

  auto c6 = cli({"decompose", graph("c6_racg.json")});
  CHECK(starts_with(c6.out, "split: "));
  std::size_t lines = 0;
  for (char ch : c6.out) lines += ch == '\n';
  CHECK(lines == 5);

  auto dihedral = cli({"finiteness", graph("dihedral_inf.json")});
  CHECK(dihedral.out == "infinite, affine Ã1\n");
  CHECK(cli({"finiteness", graph("sym5.json")}).out == "finite, order 120, A(4)\n");

  auto braid = cli({"present", graph("braid_b5.json")});
  CHECK(braid.code == 0);
  CHECK(braid.out == "⟨ a, b, c, d ∣ aba = bab, [a,c], [a,d], bcb = cbc, [b,d], cdc = dcd ⟩\n");
}

TEST_CASE("exit codes") {
  CHECK(cli({"classify", "/nonexistent/graph.json"}).code == 1);
  auto bad = write_temp("bad.json", R"({"flavor": "coxeter", "vertices": [{"id": "a"}, {"id": "b"}],
    "edges": [{"u": "a", "v": "b", "label": 1}]})");
  auto r = cli({"classify", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("edge label must be >= 2") != std::string::npos);
  auto nosem = write_temp("nosem.json", R"({"vertices": [{"id": "a", "group": {"rank": 0, "torsion": [3]}},
    {"id": "b", "group": {"rank": 0, "torsion": [3]}}], "edges": [{"u": "a", "v": "b", "label": 3}]})");
  CHECK(cli({"classify", nosem}).code == 1);
  CHECK(cli({"present", nosem}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"census", "--max-vertices", "9"}).code == 1);
  CHECK(cli({"--format", "xml", "classify", graph("sym5.json")}).code == 1);
}

TEST_CASE("census command") {
  auto racg = cli({"census", "--flavor", "racg", "--max-vertices", "3"});
  CHECK(racg.code == 0);
  CHECK(racg.out.find("smallest incoherent: none") != std::string::npos);

  auto raag = cli({"census", "--flavor", "raag", "--max-vertices", "4", "--workers", "2"});
  CHECK(raag.code == 0);
  CHECK(raag.out.find("smallest incoherent: (4, 4)") != std::string::npos);

  auto csv = (fs::temp_directory_path() / "cohere_cli_census.csv").string();
  auto json = cli({"--format", "json", "census", "--max-vertices", "3", "--csv", csv});
  auto j = cohere::ordered_json::parse(json.out);
  CHECK(j["graphs"] == 11);
  CHECK(j["verification_failures"] == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,e,coherent,incoherent,unknown,total");
}
