#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cohere {

/// Finitely generated abelian group Z^rank x Z_{d1} x ... x Z_{dk} in
/// invariant-factor form: every d_i >= 2 and d_i divides d_{i+1}.
/// Construction normalizes arbitrary cyclic factors, so equality of two labels
/// is equality of the groups up to isomorphism.
class AbelianGroupLabel {
 public:
  /// Throws InputError for the trivial group or a torsion entry < 2.
  AbelianGroupLabel(std::uint32_t rank, std::vector<std::uint64_t> cyclic_orders);

  static AbelianGroupLabel integers() { return AbelianGroupLabel(1, {}); }
  static AbelianGroupLabel cyclic(std::uint64_t d) { return AbelianGroupLabel(0, {d}); }

  std::uint32_t rank() const noexcept { return rank_; }
  const std::vector<std::uint64_t>& torsion() const noexcept { return torsion_; }

  /// Group order; nullopt means infinite.
  std::optional<std::uint64_t> order() const;
  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_z() const noexcept { return rank_ == 1 && torsion_.empty(); }
  bool is_z2() const noexcept { return rank_ == 0 && torsion_.size() == 1 && torsion_[0] == 2; }
  /// Number of cyclic factors, i.e. generators in a minimal presentation.
  std::size_t generator_count() const noexcept { return rank_ + torsion_.size(); }

  /// "Z2", "Z", "Z^3", "Z2xZ4xZ^2".
  std::string to_string() const;

  friend bool operator==(const AbelianGroupLabel&, const AbelianGroupLabel&) = default;
  friend auto operator<=>(const AbelianGroupLabel&, const AbelianGroupLabel&) = default;

 private:
  std::uint32_t rank_ = 0;
  std::vector<std::uint64_t> torsion_;
};

/// Parses the textual group forms "Z", "Z^r", "Z2", "Zd", "Z_d".
AbelianGroupLabel parse_group_label(const std::string& text);

}  // namespace cohere
