#include "cohere/coxeter.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Dense>

#include "cohere/canonical.hpp"
#include "cohere/errors.hpp"

namespace cohere {
namespace {

// Edge label standing for an infinite bond when a diagram is encoded as a
// LabeledGraph for isomorphism testing.
constexpr int kInfiniteBondLabel = 1 << 20;

VertexSet all_vertices_of(std::size_t n) {
  VertexSet v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

GroupOrder factorial(int n) {
  GroupOrder f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string diagram_key(const CoxeterMatrix& m, std::span<const std::size_t> nodes) {
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < nodes.size(); ++i) vs.push_back({std::to_string(i), AbelianGroupLabel::cyclic(2)});
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!m.bonded(nodes[i], nodes[j])) continue;
      const int bond = m(nodes[i], nodes[j]);
      es.push_back({vs[i].id, vs[j].id, bond == kInfinity ? kInfiniteBondLabel : bond});
    }
  }
  return canonical_key(LabeledGraph(std::move(vs), es), std::numeric_limits<std::size_t>::max());
}

CoxeterMatrix commuting(std::size_t r) {
  CoxeterMatrix m(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) m.set(i, j, 2);
  }
  return m;
}

void path(CoxeterMatrix& m, std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) m.set(i, i + 1, 3);
}

// Rank >= 3 lookup table: canonical diagram key -> type.
const std::map<std::string, IrreducibleType>& table_for_rank(std::size_t rank) {
  static std::mutex mutex;
  static std::map<std::size_t, std::map<std::string, IrreducibleType>> tables;
  std::lock_guard lock(mutex);
  auto [it, inserted] = tables.try_emplace(rank);
  if (inserted) {
    for (const auto& t : table_entries(rank)) {
      const auto d = diagram_of(t);
      it->second.emplace(diagram_key(d, all_vertices_of(d.size())), t);
    }
  }
  return it->second;
}

}  // namespace

std::size_t IrreducibleType::rank() const {
  switch (family) {
    case TypeFamily::F: return 4;
    case TypeFamily::I2: return 2;
    case TypeFamily::A: case TypeFamily::B: case TypeFamily::D:
    case TypeFamily::E: case TypeFamily::H: return static_cast<std::size_t>(index);
    case TypeFamily::Indefinite: return 0;
    default: return static_cast<std::size_t>(index) + 1;
  }
}

std::optional<GroupOrder> IrreducibleType::order() const {
  const int n = index;
  switch (family) {
    case TypeFamily::A: return factorial(n + 1);
    case TypeFamily::B: return (GroupOrder(1) << n) * factorial(n);
    case TypeFamily::D: return (GroupOrder(1) << (n - 1)) * factorial(n);
    case TypeFamily::E:
      return n == 6 ? GroupOrder(51840) : n == 7 ? GroupOrder(2903040) : GroupOrder(696729600);
    case TypeFamily::F: return GroupOrder(1152);
    case TypeFamily::H: return n == 3 ? GroupOrder(120) : GroupOrder(14400);
    case TypeFamily::I2: return GroupOrder(2 * n);
    default: return std::nullopt;
  }
}

std::string IrreducibleType::name() const {
  const std::string n = std::to_string(index);
  switch (family) {
    case TypeFamily::A: return "A(" + n + ")";
    case TypeFamily::B: return "B(" + n + ")";
    case TypeFamily::D: return "D(" + n + ")";
    case TypeFamily::E: return "E" + n;
    case TypeFamily::F: return "F" + n;
    case TypeFamily::H: return "H" + n;
    case TypeFamily::I2: return "I2(" + n + ")";
    case TypeFamily::AffineA: return "Ã" + n;
    case TypeFamily::AffineB: return "B̃" + n;
    case TypeFamily::AffineC: return "C̃" + n;
    case TypeFamily::AffineD: return "D̃" + n;
    case TypeFamily::AffineE: return "Ẽ" + n;
    case TypeFamily::AffineF: return "F̃" + n;
    case TypeFamily::AffineG: return "G̃" + n;
    case TypeFamily::Indefinite: return "Indefinite";
  }
  return "Indefinite";
}

CoxeterMatrix coxeter_matrix(const LabeledGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!g.group(v).is_z2()) {
      throw InputError("coxeter_matrix: vertex '" + g.id(v) + "' has group " + g.group(v).to_string() +
                       ", expected Z2");
    }
  }
  CoxeterMatrix m(g.size());
  for (const auto& e : g.edges()) m.set(e.u, e.v, e.label);
  return m;
}

CoxeterMatrix diagram_of(const IrreducibleType& t) {
  const std::size_t r = t.rank();
  const int n = t.index;
  CoxeterMatrix m = commuting(r);
  switch (t.family) {
    case TypeFamily::A: path(m, 0, r - 1); break;
    case TypeFamily::B:
      path(m, 0, r - 1);
      m.set(r - 2, r - 1, 4);
      break;
    case TypeFamily::D:
      path(m, 0, r - 2);
      m.set(r - 3, r - 1, 3);
      break;
    case TypeFamily::E:
      path(m, 0, r - 2);
      m.set(2, r - 1, 3);
      break;
    case TypeFamily::F:
      path(m, 0, 3);
      m.set(1, 2, 4);
      break;
    case TypeFamily::H:
      path(m, 0, r - 1);
      m.set(0, 1, 5);
      break;
    case TypeFamily::I2: m.set(0, 1, n); break;
    case TypeFamily::AffineA:
      if (n == 1) {
        m.set(0, 1, kInfinity);
      } else {
        path(m, 0, r - 1);
        m.set(0, r - 1, 3);
      }
      break;
    case TypeFamily::AffineB:
      path(m, 0, r - 2);
      m.set(r - 3, r - 2, 4);
      m.set(1, r - 1, 3);
      break;
    case TypeFamily::AffineC:
      path(m, 0, r - 1);
      m.set(0, 1, 4);
      m.set(r - 2, r - 1, 4);
      break;
    case TypeFamily::AffineD:
      path(m, 0, r - 5);
      m.set(0, r - 4, 3);
      m.set(0, r - 3, 3);
      m.set(r - 5, r - 2, 3);
      m.set(r - 5, r - 1, 3);
      break;
    case TypeFamily::AffineE:
      if (n == 6) {
        for (std::size_t arm : {1u, 3u, 5u}) {
          m.set(0, arm, 3);
          m.set(arm, arm + 1, 3);
        }
      } else if (n == 7) {
        path(m, 0, 6);
        m.set(3, 7, 3);
      } else {
        path(m, 0, 7);
        m.set(2, 8, 3);
      }
      break;
    case TypeFamily::AffineF:
      path(m, 0, 4);
      m.set(2, 3, 4);
      break;
    case TypeFamily::AffineG:
      m.set(0, 1, 3);
      m.set(1, 2, 6);
      break;
    case TypeFamily::Indefinite: throw PreconditionError("diagram_of: indefinite type has no diagram");
  }
  return m;
}

std::vector<IrreducibleType> table_entries(std::size_t rank, int max_dihedral) {
  std::vector<IrreducibleType> out;
  const int r = static_cast<int>(rank);
  if (r >= 1) out.push_back({TypeFamily::A, r});
  if (r >= 2) out.push_back({TypeFamily::B, r});
  if (r >= 4) out.push_back({TypeFamily::D, r});
  if (r >= 6 && r <= 8) out.push_back({TypeFamily::E, r});
  if (r == 4) out.push_back({TypeFamily::F, 4});
  if (r == 3 || r == 4) out.push_back({TypeFamily::H, r});
  if (r == 2) {
    for (int m = 5; m <= max_dihedral; ++m) out.push_back({TypeFamily::I2, m});
  }
  const int n = r - 1;
  if (n >= 1) out.push_back({TypeFamily::AffineA, n});
  if (n >= 3) out.push_back({TypeFamily::AffineB, n});
  if (n >= 2) out.push_back({TypeFamily::AffineC, n});
  if (n >= 4) out.push_back({TypeFamily::AffineD, n});
  if (n >= 6 && n <= 8) out.push_back({TypeFamily::AffineE, n});
  if (n == 4) out.push_back({TypeFamily::AffineF, 4});
  if (n == 2) out.push_back({TypeFamily::AffineG, 2});
  return out;
}

namespace {

IrreducibleType match_component(const CoxeterMatrix& m, const VertexSet& nodes) {
  const std::size_t r = nodes.size();
  if (r == 1) return {TypeFamily::A, 1};
  if (r == 2) {
    const int bond = m(nodes[0], nodes[1]);
    if (bond == kInfinity) return {TypeFamily::AffineA, 1};
    if (bond == 3) return {TypeFamily::A, 2};
    if (bond == 4) return {TypeFamily::B, 2};
    return {TypeFamily::I2, bond};
  }
  // Every table diagram of rank >= 3 is a tree, or a cycle (affine A), with
  // finite bonds of at most 6.
  std::size_t bonds = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!m.bonded(nodes[i], nodes[j])) continue;
      ++bonds;
      if (m(nodes[i], nodes[j]) > 6) return {};
    }
  }
  if (bonds > r) return {};
  const auto& table = table_for_rank(r);
  auto it = table.find(diagram_key(m, nodes));
  return it == table.end() ? IrreducibleType{} : it->second;
}

CoxeterMatrix restrict_to(const CoxeterMatrix& m, const VertexSet& nodes) {
  CoxeterMatrix out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) out.set(i, j, m(nodes[i], nodes[j]));
  }
  return out;
}

}  // namespace

std::vector<double> cosine_spectrum(const CoxeterMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const int mij = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      b(i, j) = mij == kInfinity ? -1.0 : -std::cos(std::numbers::pi / mij);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SpectralClass spectral_class(const std::vector<double>& spectrum, double tolerance) {
  std::size_t zero = 0;
  for (double lambda : spectrum) {
    if (lambda < -tolerance) return SpectralClass::Neither;
    if (lambda <= tolerance) ++zero;
  }
  if (zero == 0) return SpectralClass::Finite;
  return zero == 1 ? SpectralClass::Affine : SpectralClass::Neither;
}

std::vector<ComponentType> classify_components(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::vector<ComponentType> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && m.bonded(comp[head], w)) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    auto type = match_component(m, comp);
    const auto spectral = spectral_class(cosine_spectrum(restrict_to(m, comp)));
    const auto expected = type.is_finite()   ? SpectralClass::Finite
                          : type.is_affine() ? SpectralClass::Affine
                                             : SpectralClass::Neither;
    if (spectral != expected) {
      throw InternalError("Coxeter type " + type.name() +
                          " disagrees with the cosine-matrix spectrum of its component");
    }
    out.push_back({std::move(comp), type});
  }
  return out;
}

}  // namespace cohere
