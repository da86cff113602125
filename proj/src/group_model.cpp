#include "cohere/group_model.hpp"

#include <algorithm>
#include <sstream>

#include "cohere/errors.hpp"

namespace cohere {
namespace {

bool pair_certifies(const AbelianGroupLabel& a, const AbelianGroupLabel& b) {
  // (|A|-1)(|B|-1) >= 2 fails only for Z2 against Z2.
  return !(a.is_z2() && b.is_z2());
}

VertexSet map_through(const VertexSet& local, const VertexSet& parent) {
  VertexSet out;
  for (std::size_t v : local) out.push_back(parent[v]);
  return out;
}

SlenderCertificate coxeter_slenderness(const LabeledGraph& g) {
  SlenderCertificate cert;
  bool slender = true;
  for (auto& comp : classify_components(coxeter_matrix(g))) {
    if (comp.type.is_finite()) {
      ++cert.finite_factors;
    } else if (comp.type.is_affine()) {
      ++cert.affine_factors;
    } else {
      slender = false;
    }
    cert.factors.push_back({std::move(comp.vertices), comp.type});
  }
  if (slender) {
    cert.verdict = Slenderness::Slender;
    cert.reason = "coxeter-finite-affine";
    return cert;
  }
  cert.verdict = Slenderness::NotSlender;
  cert.f2 = contains_F2_certificate(g);
  cert.reason = cert.f2 ? "f2-certificate" : "coxeter-indefinite-component";
  cert.finite_factors = cert.affine_factors = 0;
  cert.factors.clear();
  return cert;
}

SlenderCertificate abelian_certificate(const LabeledGraph& g) {
  SlenderCertificate cert;
  cert.verdict = Slenderness::Slender;
  cert.reason = "abelian";
  for (std::size_t v = 0; v < g.size(); ++v) cert.factors.push_back({{v}, std::nullopt});
  return cert;
}

const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(std::uint64_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (char c : digits) out += kSuperscripts[c - '0'];
  return out;
}

}  // namespace

Flavor detect_flavor(const LabeledGraph& g) {
  Flavor f;
  f.graph_product = g.all_labels_two();
  f.artin = f.coxeter = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    f.artin = f.artin && g.group(v).is_z();
    f.coxeter = f.coxeter && g.group(v).is_z2();
  }
  return f;
}

std::string to_string(const Flavor& f) {
  if (f.racg()) return "RACG";
  if (f.raag()) return "RAAG";
  if (f.coxeter) return "Coxeter";
  if (f.artin) return "Artin";
  if (f.graph_product) return "graph product";
  return "none";
}

std::string to_string(Slenderness s) {
  switch (s) {
    case Slenderness::Slender: return "slender";
    case Slenderness::NotSlender: return "not slender";
    case Slenderness::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<F2Certificate> contains_F2_certificate(const LabeledGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && pair_certifies(g.group(u), g.group(v))) {
        return F2Certificate{F2Certificate::Kind::Pair, {u, v}};
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (std::size_t w = v + 1; w < n; ++w) {
        if (!g.adjacent(u, w) && !g.adjacent(v, w)) {
          return F2Certificate{F2Certificate::Kind::Triple, {u, v, w}};
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_F2_certificate(const LabeledGraph& g, const F2Certificate& cert) {
  const auto& vs = cert.vertices;
  const std::size_t expected = cert.kind == F2Certificate::Kind::Pair ? 2 : 3;
  if (vs.size() != expected) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return cert.kind == F2Certificate::Kind::Triple || pair_certifies(g.group(vs[0]), g.group(vs[1]));
}

SlenderCertificate is_slender(const LabeledGraph& g) {
  const Flavor f = detect_flavor(g);
  if (f.coxeter) return coxeter_slenderness(g);
  const bool abelian = g.is_complete() && f.graph_product;
  if (abelian) return abelian_certificate(g);

  SlenderCertificate cert;
  if (f.graph_product) {
    if (auto f2 = contains_F2_certificate(g)) {
      cert.verdict = Slenderness::NotSlender;
      cert.reason = "f2-certificate";
      cert.f2 = std::move(f2);
      return cert;
    }
    // Only Z2-Z2 pairs are non-adjacent now, so every join factor with more
    // than one vertex is a right-angled Coxeter factor.
    cert.verdict = Slenderness::Slender;
    cert.reason = "join-factors";
    for (const auto& factor : join_factors(g)) {
      if (factor.size() == 1) {
        cert.factors.push_back({factor, std::nullopt});
        continue;
      }
      const auto sub = induced_subgraph(g, factor);
      if (!detect_flavor(sub).coxeter) {
        return {Slenderness::Unknown, "mixed-join-factor", {}, 0, 0, std::nullopt};
      }
      auto inner = coxeter_slenderness(sub);
      if (inner.verdict != Slenderness::Slender) {
        if (inner.f2) inner.f2->vertices = map_through(inner.f2->vertices, factor);
        return {Slenderness::NotSlender, inner.reason, {}, 0, 0, inner.f2};
      }
      cert.finite_factors += inner.finite_factors;
      cert.affine_factors += inner.affine_factors;
      for (auto& sf : inner.factors) cert.factors.push_back({map_through(sf.vertices, factor), sf.type});
    }
    std::sort(cert.factors.begin(), cert.factors.end(),
              [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
    return cert;
  }
  if (f.artin) {
    if (auto f2 = contains_F2_certificate(g)) {
      return {Slenderness::NotSlender, "f2-certificate", {}, 0, 0, std::move(f2)};
    }
    return {Slenderness::Unknown, "artin-dihedral-open", {}, 0, 0, std::nullopt};
  }
  return {Slenderness::Unknown, "no-group-semantics", {}, 0, 0, std::nullopt};
}

Finiteness is_finite(const LabeledGraph& g) {
  const Flavor f = detect_flavor(g);
  Finiteness result;
  if (f.coxeter) {
    result.components = classify_components(coxeter_matrix(g));
    result.finite = std::all_of(result.components.begin(), result.components.end(),
                                [](const auto& c) { return c.type.is_finite(); });
    if (result.finite) {
      GroupOrder order = 1;
      for (const auto& c : result.components) order *= *c.type.order();
      result.order = order;
    }
    return result;
  }
  if (f.graph_product) {
    result.finite = g.is_complete();
    GroupOrder order = 1;
    for (std::size_t v = 0; v < g.size() && result.finite; ++v) {
      auto o = g.group(v).order();
      if (!o) {
        result.finite = false;
      } else {
        order *= *o;
      }
    }
    if (result.finite) result.order = order;
    return result;
  }
  throw InputError("finiteness is defined for Coxeter graphs and graph product graphs only");
}

std::string emit_presentation(const LabeledGraph& g) {
  const Flavor f = detect_flavor(g);
  if (!f.has_group_semantics()) {
    throw InputError("no group is attached to a graph with edge labels > 2 unless every vertex group is Z or Z2");
  }
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.size(); ++v) total += g.group(v).generator_count();
  std::vector<std::vector<std::string>> gens(g.size());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t i = 0; i < g.group(v).generator_count(); ++i, ++next) {
      gens[v].push_back(total <= 26 ? std::string(1, static_cast<char>('a' + next))
                                    : "g" + std::to_string(next + 1));
    }
  }
  std::vector<std::string> relations;
  auto commutator = [](const std::string& x, const std::string& y) { return "[" + x + "," + y + "]"; };
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& torsion = g.group(v).torsion();
    for (std::size_t i = 0; i < torsion.size(); ++i) relations.push_back(gens[v][i] + superscript(torsion[i]));
    for (std::size_t i = 0; i < gens[v].size(); ++i) {
      for (std::size_t j = i + 1; j < gens[v].size(); ++j) relations.push_back(commutator(gens[v][i], gens[v][j]));
    }
  }
  for (const auto& e : g.edges()) {
    const auto& a = gens[e.u];
    const auto& b = gens[e.v];
    if (f.coxeter) {
      relations.push_back("(" + a[0] + b[0] + ")" + superscript(static_cast<std::uint64_t>(e.label)));
    } else if (f.artin && e.label > 2) {
      std::string lhs, rhs;
      for (int k = 0; k < e.label; ++k) {
        lhs += (k % 2 == 0 ? a[0] : b[0]);
        rhs += (k % 2 == 0 ? b[0] : a[0]);
      }
      relations.push_back(lhs + " = " + rhs);
    } else {
      for (const auto& x : a) {
        for (const auto& y : b) relations.push_back(commutator(x, y));
      }
    }
  }
  std::ostringstream out;
  out << "⟨ ";
  bool first = true;
  for (const auto& vg : gens) {
    for (const auto& x : vg) {
      out << (first ? "" : ", ") << x;
      first = false;
    }
  }
  out << " ∣ ";
  for (std::size_t i = 0; i < relations.size(); ++i) out << (i ? ", " : "") << relations[i];
  out << (relations.empty() ? "⟩" : " ⟩");
  return out.str();
}

}  // namespace cohere
