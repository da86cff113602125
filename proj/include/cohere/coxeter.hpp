#pragma once

#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohere/labeled_graph.hpp"

namespace cohere {

using GroupOrder = boost::multiprecision::cpp_int;

/// Order m(v,w) of the product vw; kInfinity for non-adjacent pairs.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(std::size_t n) : n_(n), m_(n * n, kInfinity) {
    for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
  }

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int m) { m_[i * n_ + j] = m_[j * n_ + i] = m; }

  /// Bond in the standard diagram: m >= 3, including infinity.
  bool bonded(std::size_t i, std::size_t j) const { return i != j && (*this)(i, j) >= 3; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> m_;
};

/// Throws InputError unless every vertex group is Z2.
CoxeterMatrix coxeter_matrix(const LabeledGraph& g);

enum class TypeFamily {
  A, B, D, E, F, H, I2,
  AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG,
  Indefinite
};

/// Irreducible Coxeter type. `index` is n for A(n), B(n), D(n), the affine
/// families and E, F, H; m for I2(m).
struct IrreducibleType {
  TypeFamily family = TypeFamily::Indefinite;
  int index = 0;

  bool is_finite() const noexcept { return family <= TypeFamily::I2; }
  bool is_affine() const noexcept { return family >= TypeFamily::AffineA && family <= TypeFamily::AffineG; }
  /// Number of diagram nodes.
  std::size_t rank() const;
  /// Group order for finite types.
  std::optional<GroupOrder> order() const;
  /// "A(4)", "I2(5)", "E8", "Ã1", "B̃3", "Indefinite".
  std::string name() const;

  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

struct ComponentType {
  VertexSet vertices;
  IrreducibleType type;
};

/// Bond-labeled standard diagram of one table entry, as a Coxeter matrix on
/// rank() nodes.
CoxeterMatrix diagram_of(const IrreducibleType& type);

/// Every finite and affine table entry with rank() == rank, with I2(m) for
/// 5 <= m <= max_dihedral.
std::vector<IrreducibleType> table_entries(std::size_t rank, int max_dihedral = 12);

/// Splits the standard diagram into connected components and matches each
/// one against the finite and affine tables up to bond-labeled isomorphism.
/// The match is cross-checked against the cosine-matrix spectrum; a
/// disagreement throws InternalError.
std::vector<ComponentType> classify_components(const CoxeterMatrix& m);

/// Eigenvalues (ascending) of B_ij = -cos(pi / m_ij), with -1 for infinity.
std::vector<double> cosine_spectrum(const CoxeterMatrix& m);

enum class SpectralClass { Finite, Affine, Neither };

/// Positive definite -> Finite; positive semidefinite with a one-dimensional
/// kernel -> Affine (meaningful for connected diagrams).
SpectralClass spectral_class(const std::vector<double>& spectrum, double tolerance = 1e-9);

}  // namespace cohere
