#include "cohere/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cohere/errors.hpp"

namespace cohere {
namespace {

using nlohmann::json;

enum class DeclaredFlavor { None, GraphProduct, Artin, Coxeter };

DeclaredFlavor parse_flavor_name(const std::string& name) {
  if (name == "graph_product") return DeclaredFlavor::GraphProduct;
  if (name == "artin") return DeclaredFlavor::Artin;
  if (name == "coxeter") return DeclaredFlavor::Coxeter;
  throw InputError("unknown flavor '" + name + "' (expected graph_product, artin or coxeter)");
}

std::optional<AbelianGroupLabel> flavor_group(DeclaredFlavor f) {
  switch (f) {
    case DeclaredFlavor::Artin: return AbelianGroupLabel::integers();
    case DeclaredFlavor::Coxeter: return AbelianGroupLabel::cyclic(2);
    default: return std::nullopt;
  }
}

AbelianGroupLabel resolve_group(const std::string& id, std::optional<AbelianGroupLabel> given,
                                DeclaredFlavor flavor) {
  auto fixed = flavor_group(flavor);
  if (given && fixed && *given != *fixed) {
    throw InputError("vertex '" + id + "' has group " + given->to_string() +
                     ", which conflicts with the declared flavor");
  }
  if (given) return *given;
  if (fixed) return *fixed;
  throw InputError("vertex '" + id + "' has no group and no flavor fixes one");
}

void check_declared_labels(const std::vector<EdgeSpec>& edges, DeclaredFlavor flavor) {
  if (flavor != DeclaredFlavor::GraphProduct) return;
  for (const auto& e : edges) {
    if (e.label != 2) {
      throw InputError("graph_product flavor requires every edge label to be 2 (edge " + e.u +
                       "-" + e.v + ")");
    }
  }
}

void reject_bom(std::string_view text) {
  if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
      static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF) {
    throw InputError("byte-order mark is not allowed");
  }
}

std::int64_t json_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw InputError(what + " must be an integer");
  return value.get<std::int64_t>();
}

AbelianGroupLabel group_from_json(const json& j, const std::string& id) {
  if (!j.is_object()) throw InputError("group of vertex '" + id + "' must be an object");
  std::int64_t rank = 0;
  if (j.contains("rank")) rank = json_int(j.at("rank"), "group rank");
  if (rank < 0) throw InputError("group rank must be non-negative");
  std::vector<std::uint64_t> torsion;
  if (j.contains("torsion")) {
    if (!j.at("torsion").is_array()) throw InputError("group torsion must be an array");
    for (const auto& t : j.at("torsion")) {
      auto d = json_int(t, "torsion entry");
      if (d < 2) throw InputError("torsion entries must be >= 2, got " + std::to_string(d));
      torsion.push_back(static_cast<std::uint64_t>(d));
    }
  }
  return AbelianGroupLabel(static_cast<std::uint32_t>(rank), std::move(torsion));
}

// --- DOT ---------------------------------------------------------------------

struct Token {
  enum Kind { Id, Edge, Arrow, LBrace, RBrace, LBracket, RBracket, Equals, Semi, Comma, End } kind;
  std::string text;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : s_(text) {}

  Token next() {
    skip_blank();
    if (pos_ >= s_.size()) return {Token::End, ""};
    const char c = s_[pos_];
    auto single = [&](Token::Kind k) {
      ++pos_;
      return Token{k, std::string(1, c)};
    };
    switch (c) {
      case '{': return single(Token::LBrace);
      case '}': return single(Token::RBrace);
      case '[': return single(Token::LBracket);
      case ']': return single(Token::RBracket);
      case '=': return single(Token::Equals);
      case ';': return single(Token::Semi);
      case ',': return single(Token::Comma);
      default: break;
    }
    if (c == '-' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == '-' || s_[pos_ + 1] == '>')) {
      pos_ += 2;
      return s_[pos_ - 1] == '-' ? Token{Token::Edge, "--"} : Token{Token::Arrow, "->"};
    }
    if (c == '"') {
      std::string out;
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        out.push_back(s_[pos_++]);
      }
      if (pos_ >= s_.size()) throw InputError("DOT: unterminated string");
      ++pos_;
      return {Token::Id, out};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
        static_cast<unsigned char>(c) >= 0x80) {
      std::size_t start = pos_;
      while (pos_ < s_.size()) {
        const char d = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' || d == '^' ||
            static_cast<unsigned char>(d) >= 0x80) {
          ++pos_;
        } else {
          break;
        }
      }
      return {Token::Id, std::string(s_.substr(start, pos_ - start))};
    }
    throw InputError(std::string("DOT: unexpected character '") + c + "'");
  }

 private:
  void skip_blank() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.substr(pos_, 2) == "//" || s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (s_.substr(pos_, 2) == "/*") {
        auto end = s_.find("*/", pos_ + 2);
        pos_ = end == std::string_view::npos ? s_.size() : end + 2;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class DotParser {
 public:
  explicit DotParser(std::string_view text) : lex_(text) { advance(); }

  LabeledGraph parse() {
    if (is_keyword("strict")) advance();
    if (is_keyword("digraph")) throw InputError("DOT: directed graphs are not supported");
    if (!is_keyword("graph")) throw InputError("DOT: expected 'graph'");
    advance();
    if (tok_.kind == Token::Id) advance();
    expect(Token::LBrace, "'{'");
    while (tok_.kind != Token::RBrace) {
      if (tok_.kind == Token::End) throw InputError("DOT: missing '}'");
      statement();
    }
    advance();
    if (tok_.kind != Token::End) throw InputError("DOT: trailing content after '}'");
    return build();
  }

 private:
  using Attrs = std::map<std::string, std::string>;

  void advance() { tok_ = lex_.next(); }
  bool is_keyword(const char* k) const { return tok_.kind == Token::Id && tok_.text == k; }
  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) throw InputError(std::string("DOT: expected ") + what + ", got '" + tok_.text + "'");
    advance();
  }

  Attrs attr_list() {
    Attrs attrs;
    while (tok_.kind == Token::LBracket) {
      advance();
      while (tok_.kind != Token::RBracket) {
        if (tok_.kind != Token::Id) throw InputError("DOT: expected attribute name");
        std::string key = tok_.text;
        advance();
        expect(Token::Equals, "'='");
        if (tok_.kind != Token::Id) throw InputError("DOT: expected attribute value");
        attrs[key] = tok_.text;
        advance();
        if (tok_.kind == Token::Comma || tok_.kind == Token::Semi) advance();
      }
      advance();
    }
    return attrs;
  }

  void statement() {
    if (tok_.kind == Token::Semi) {
      advance();
      return;
    }
    if (tok_.kind != Token::Id) throw InputError("DOT: unexpected '" + tok_.text + "'");
    if (tok_.text == "node" || tok_.text == "edge" || tok_.text == "graph") {
      const std::string kind = tok_.text;
      advance();
      auto attrs = attr_list();
      auto& target = kind == "node" ? node_defaults_ : kind == "edge" ? edge_defaults_ : graph_attrs_;
      for (auto& [k, v] : attrs) target[k] = v;
      return;
    }
    std::string first = tok_.text;
    advance();
    if (tok_.kind == Token::Equals) {
      advance();
      if (tok_.kind != Token::Id) throw InputError("DOT: expected graph attribute value");
      graph_attrs_[first] = tok_.text;
      advance();
      return;
    }
    if (tok_.kind == Token::Arrow) throw InputError("DOT: directed edges are not supported");
    if (tok_.kind != Token::Edge) {
      Attrs attrs = node_defaults_;
      for (auto& [k, v] : attr_list()) attrs[k] = v;
      touch(first, attrs);
      return;
    }
    std::vector<std::string> chain{first};
    while (tok_.kind == Token::Edge) {
      advance();
      if (tok_.kind != Token::Id) throw InputError("DOT: expected vertex after '--'");
      chain.push_back(tok_.text);
      advance();
    }
    if (tok_.kind == Token::Arrow) throw InputError("DOT: directed edges are not supported");
    Attrs attrs = edge_defaults_;
    for (auto& [k, v] : attr_list()) attrs[k] = v;
    int label = 2;
    if (auto it = attrs.find("label"); it != attrs.end()) {
      try {
        std::size_t used = 0;
        label = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("DOT: edge label '" + it->second + "' is not an integer");
      }
    }
    for (const auto& id : chain) {
      if (!vertex_attrs_.count(id)) touch(id, node_defaults_);
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges_.push_back({chain[i], chain[i + 1], label});
  }

  void touch(const std::string& id, const Attrs& attrs) {
    auto [it, inserted] = vertex_attrs_.try_emplace(id);
    if (inserted) order_.push_back(id);
    if (auto g = attrs.find("group"); g != attrs.end()) it->second["group"] = g->second;
  }

  LabeledGraph build() {
    DeclaredFlavor flavor = DeclaredFlavor::None;
    if (auto f = graph_attrs_.find("flavor"); f != graph_attrs_.end()) flavor = parse_flavor_name(f->second);
    std::vector<VertexSpec> vertices;
    for (const auto& id : order_) {
      std::optional<AbelianGroupLabel> given;
      const auto& attrs = vertex_attrs_.at(id);
      if (auto g = attrs.find("group"); g != attrs.end()) given = parse_group_label(g->second);
      vertices.push_back({id, resolve_group(id, given, flavor)});
    }
    check_declared_labels(edges_, flavor);
    return LabeledGraph(std::move(vertices), edges_);
  }

  DotLexer lex_;
  Token tok_{Token::End, ""};
  Attrs node_defaults_, edge_defaults_, graph_attrs_;
  std::map<std::string, Attrs> vertex_attrs_;
  std::vector<std::string> order_;
  std::vector<EdgeSpec> edges_;
};

}  // namespace

LabeledGraph parse_graph_json(std::string_view text) {
  reject_bom(text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  DeclaredFlavor flavor = DeclaredFlavor::None;
  if (doc.contains("flavor")) {
    if (!doc.at("flavor").is_string()) throw InputError("flavor must be a string");
    flavor = parse_flavor_name(doc.at("flavor").get<std::string>());
  }
  if (!doc.contains("vertices") || !doc.at("vertices").is_array()) {
    throw InputError("graph document needs a \"vertices\" array");
  }
  std::vector<VertexSpec> vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_object() || !v.contains("id") || !v.at("id").is_string()) {
      throw InputError("every vertex needs a string \"id\"");
    }
    const auto id = v.at("id").get<std::string>();
    std::optional<AbelianGroupLabel> given;
    if (v.contains("group")) given = group_from_json(v.at("group"), id);
    vertices.push_back({id, resolve_group(id, given, flavor)});
  }
  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc.at("edges")) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.at("u").is_string() ||
          !e.at("v").is_string()) {
        throw InputError("every edge needs string endpoints \"u\" and \"v\"");
      }
      EdgeSpec spec{e.at("u").get<std::string>(), e.at("v").get<std::string>(), 2};
      if (e.contains("label")) {
        auto m = json_int(e.at("label"), "edge label");
        if (m < 2) {
          throw InputError("edge label must be >= 2 (edge " + spec.u + "-" + spec.v + " has label " +
                           std::to_string(m) + ")");
        }
        if (m > 1'000'000) throw InputError("edge label " + std::to_string(m) + " is too large");
        spec.label = static_cast<int>(m);
      }
      edges.push_back(std::move(spec));
    }
  }
  check_declared_labels(edges, flavor);
  return LabeledGraph(std::move(vertices), edges);
}

LabeledGraph parse_graph_dot(std::string_view text) {
  reject_bom(text);
  return DotParser(text).parse();
}

LabeledGraph parse_graph(std::string_view text) {
  reject_bom(text);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_dot(text);
  }
  throw InputError("empty graph document");
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

nlohmann::ordered_json graph_to_json(const LabeledGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    nlohmann::ordered_json group;
    group["rank"] = g.group(v).rank();
    group["torsion"] = g.group(v).torsion();
    doc["vertices"].push_back({{"id", g.id(v)}, {"group", group}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"label", e.label}});
  }
  return doc;
}

}  // namespace cohere
