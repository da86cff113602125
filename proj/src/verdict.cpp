#include "cohere/verdict.hpp"

#include <sstream>

#include "cohere/errors.hpp"

namespace cohere {
namespace {

constexpr std::pair<Rule, const char*> kRuleNames[] = {
    {Rule::Abelian, "abelian"},          {Rule::Slender, "slender"},
    {Rule::Droms, "droms"},              {Rule::WiseGordon, "wise_gordon"},
    {Rule::McCammondWise, "mccammond_wise"}, {Rule::FreeProduct, "free_product"},
    {Rule::Amalgam, "amalgam"},
};

IdList rename_all(const IdList& ids, const std::function<std::string(const std::string&)>& rename) {
  IdList out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(rename(id));
  return out;
}

ProofNode relabel_node(const ProofNode& node, const std::function<std::string(const std::string&)>& rename) {
  ProofNode out = node;
  out.vertices = rename_all(node.vertices, rename);
  out.left = rename_all(node.left, rename);
  out.right = rename_all(node.right, rename);
  out.separator = rename_all(node.separator, rename);
  out.elimination_order = rename_all(node.elimination_order, rename);
  for (auto& f : out.slender_factors) f.vertices = rename_all(f.vertices, rename);
  for (auto& child : out.children) child = relabel_node(child, rename);
  return out;
}

Witness relabel_witness(const Witness& w, const std::function<std::string(const std::string&)>& rename) {
  return std::visit(
      [&](const auto& x) -> Witness {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, JoinEmbedding>) {
          return {JoinEmbedding{rename_all(x.side_a, rename), rename_all(x.side_b, rename)}};
        } else if constexpr (std::is_same_v<T, DromsCycle>) {
          return {DromsCycle{rename_all(x.cycle, rename)}};
        } else if constexpr (std::is_same_v<T, WiseGordonViolation>) {
          return {WiseGordonViolation{x.kind, rename_all(x.vertices, rename)}};
        } else {
          return {IncoherentFactor{x.key, rename_all(x.vertices, rename),
                                   std::make_shared<const Witness>(relabel_witness(*x.inner, rename))}};
        }
      },
      w.value);
}

IdList ids_from(const ordered_json& j, const char* field) {
  if (!j.contains(field)) return {};
  return j.at(field).get<IdList>();
}

std::string join_ids(const IdList& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

}  // namespace

std::string to_string(Rule r) {
  for (auto [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "unknown";
}

Rule rule_from_string(const std::string& s) {
  for (auto [rule, name] : kRuleNames) {
    if (s == name) return rule;
  }
  throw InputError("unknown rule '" + s + "'");
}

std::string to_string(WiseGordonKind k) {
  switch (k) {
    case WiseGordonKind::LongCycle: return "long_cycle";
    case WiseGordonKind::Clique: return "clique";
    case WiseGordonKind::ForbiddenSquare: return "forbidden_square";
  }
  return "long_cycle";
}

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::Coherent: return "COHERENT";
    case VerdictTag::Incoherent: return "INCOHERENT";
    case VerdictTag::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict Verdict::coherent(ProofNode tree) { return {VerdictTag::Coherent, std::move(tree), std::nullopt, {}}; }
Verdict Verdict::incoherent(Witness w) { return {VerdictTag::Incoherent, std::nullopt, std::move(w), {}}; }
Verdict Verdict::unknown(std::vector<Note> notes) {
  return {VerdictTag::Unknown, std::nullopt, std::nullopt, std::move(notes)};
}

Verdict relabel(const Verdict& v, const std::function<std::string(const std::string&)>& rename) {
  Verdict out = v;
  if (v.proof) out.proof = relabel_node(*v.proof, rename);
  if (v.witness) out.witness = relabel_witness(*v.witness, rename);
  return out;
}

ordered_json to_json(const ProofNode& node) {
  ordered_json j;
  j["rule"] = to_string(node.rule);
  j["key"] = node.key;
  j["vertices"] = node.vertices;
  ordered_json data = ordered_json::object();
  auto factors_json = [&] {
    ordered_json fs = ordered_json::array();
    for (const auto& f : node.slender_factors) fs.push_back({{"vertices", f.vertices}, {"type", f.type}});
    return fs;
  };
  switch (node.rule) {
    case Rule::Amalgam:
      data["left"] = node.left;
      data["right"] = node.right;
      data["separator"] = node.separator;
      data["clique_separator"] = node.clique_separator;
      data["separator_factors"] = factors_json();
      break;
    case Rule::Slender: data["factors"] = factors_json(); break;
    case Rule::Droms:
    case Rule::WiseGordon: data["elimination_order"] = node.elimination_order; break;
    default: break;
  }
  j["data"] = std::move(data);
  j["children"] = ordered_json::array();
  for (const auto& c : node.children) j["children"].push_back(to_json(c));
  return j;
}

ProofNode proof_from_json(const ordered_json& j) {
  ProofNode node;
  node.rule = rule_from_string(j.at("rule").get<std::string>());
  node.key = j.at("key").get<std::string>();
  node.vertices = j.at("vertices").get<IdList>();
  const auto& data = j.at("data");
  node.left = ids_from(data, "left");
  node.right = ids_from(data, "right");
  node.separator = ids_from(data, "separator");
  node.elimination_order = ids_from(data, "elimination_order");
  node.clique_separator = data.value("clique_separator", false);
  for (const char* field : {"factors", "separator_factors"}) {
    if (!data.contains(field)) continue;
    for (const auto& f : data.at(field)) {
      node.slender_factors.push_back({f.at("vertices").get<IdList>(), f.at("type").get<std::string>()});
    }
  }
  for (const auto& c : j.at("children")) node.children.push_back(proof_from_json(c));
  return node;
}

ordered_json to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, JoinEmbedding>) {
          j["kind"] = "join_embedding";
          j["side_a"] = x.side_a;
          j["side_b"] = x.side_b;
        } else if constexpr (std::is_same_v<T, DromsCycle>) {
          j["kind"] = "droms_cycle";
          j["cycle"] = x.cycle;
        } else if constexpr (std::is_same_v<T, WiseGordonViolation>) {
          j["kind"] = "wise_gordon";
          j["violation"] = to_string(x.kind);
          j["vertices"] = x.vertices;
        } else {
          j["kind"] = "incoherent_factor";
          j["key"] = x.key;
          j["vertices"] = x.vertices;
          j["inner"] = to_json(*x.inner);
        }
        return j;
      },
      w.value);
}

Witness witness_from_json(const ordered_json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "join_embedding") return {JoinEmbedding{ids_from(j, "side_a"), ids_from(j, "side_b")}};
  if (kind == "droms_cycle") return {DromsCycle{ids_from(j, "cycle")}};
  if (kind == "wise_gordon") {
    const auto v = j.at("violation").get<std::string>();
    WiseGordonKind k = v == "clique"             ? WiseGordonKind::Clique
                       : v == "forbidden_square" ? WiseGordonKind::ForbiddenSquare
                       : v == "long_cycle"       ? WiseGordonKind::LongCycle
                                                 : throw InputError("unknown Wise-Gordon violation '" + v + "'");
    return {WiseGordonViolation{k, ids_from(j, "vertices")}};
  }
  if (kind == "incoherent_factor") {
    return {IncoherentFactor{j.at("key").get<std::string>(), ids_from(j, "vertices"),
                             std::make_shared<const Witness>(witness_from_json(j.at("inner")))}};
  }
  throw InputError("unknown witness kind '" + kind + "'");
}

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["verdict"] = to_string(v.tag);
  j["rule_trace"] = v.proof ? to_json(*v.proof) : ordered_json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : ordered_json(nullptr);
  j["notes"] = ordered_json::array();
  for (const auto& n : v.notes) j["notes"].push_back({{"code", n.code}, {"detail", n.detail}});
  return j;
}

Verdict verdict_from_json(const ordered_json& j) {
  Verdict v;
  const auto tag = j.at("verdict").get<std::string>();
  v.tag = tag == "COHERENT"     ? VerdictTag::Coherent
          : tag == "INCOHERENT" ? VerdictTag::Incoherent
          : tag == "UNKNOWN"    ? VerdictTag::Unknown
                                : throw InputError("unknown verdict '" + tag + "'");
  if (!j.at("rule_trace").is_null()) v.proof = proof_from_json(j.at("rule_trace"));
  if (!j.at("witness").is_null()) v.witness = witness_from_json(j.at("witness"));
  for (const auto& n : j.at("notes")) v.notes.push_back({n.at("code").get<std::string>(), n.at("detail").get<std::string>()});
  return v;
}

std::string describe(const Witness& w) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, JoinEmbedding>) {
          return "join " + join_ids(x.side_a) + "×" + join_ids(x.side_b);
        } else if constexpr (std::is_same_v<T, DromsCycle>) {
          return "induced cycle " + join_ids(x.cycle);
        } else if constexpr (std::is_same_v<T, WiseGordonViolation>) {
          return "Wise-Gordon " + to_string(x.kind) + " " + join_ids(x.vertices);
        } else {
          return "incoherent parabolic " + join_ids(x.vertices) + ": " + describe(*x.inner);
        }
      },
      w.value);
}

}  // namespace cohere
