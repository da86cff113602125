#include "cohere/abelian_group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "cohere/errors.hpp"

namespace cohere {
namespace {

std::map<std::uint64_t, std::vector<std::uint64_t>> prime_power_parts(
    const std::vector<std::uint64_t>& orders) {
  // prime -> list of prime powers, one per cyclic factor divisible by it
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts;
  for (std::uint64_t d : orders) {
    for (std::uint64_t p = 2; p <= d / p; ++p) {
      if (d % p != 0) continue;
      std::uint64_t q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      parts[p].push_back(q);
    }
    if (d > 1) parts[d].push_back(d);
  }
  return parts;
}

}  // namespace

AbelianGroupLabel::AbelianGroupLabel(std::uint32_t rank, std::vector<std::uint64_t> cyclic_orders)
    : rank_(rank) {
  for (std::uint64_t d : cyclic_orders) {
    if (d < 2) throw InputError("torsion entries must be >= 2, got " + std::to_string(d));
  }
  auto parts = prime_power_parts(cyclic_orders);
  std::size_t count = 0;
  for (auto& [p, powers] : parts) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  // Invariant factor i (from the top) collects the i-th largest power of every prime.
  torsion_.assign(count, 1);
  for (const auto& [p, powers] : parts) {
    for (std::size_t i = 0; i < powers.size(); ++i) torsion_[count - 1 - i] *= powers[i];
  }
  if (rank_ == 0 && torsion_.empty()) {
    throw InputError("vertex group must be non-trivial");
  }
}

std::optional<std::uint64_t> AbelianGroupLabel::order() const {
  if (rank_ > 0) return std::nullopt;
  std::uint64_t n = 1;
  for (std::uint64_t d : torsion_) n *= d;
  return n;
}

std::string AbelianGroupLabel::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::uint64_t d : torsion_) {
    if (!first) out << 'x';
    out << 'Z' << d;
    first = false;
  }
  if (rank_ > 0) {
    if (!first) out << 'x';
    out << 'Z';
    if (rank_ > 1) out << '^' << rank_;
  }
  return out.str();
}

AbelianGroupLabel parse_group_label(const std::string& text) {
  auto number = [&](std::string_view digits) -> std::uint64_t {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("unrecognized group label '" + text + "'");
    }
    return value;
  };
  std::string_view s = text;
  if (s.empty() || s.front() != 'Z') throw InputError("unrecognized group label '" + text + "'");
  s.remove_prefix(1);
  if (s.empty()) return AbelianGroupLabel::integers();
  if (s.front() == '^') {
    auto r = number(s.substr(1));
    if (r == 0) throw InputError("vertex group must be non-trivial");
    return AbelianGroupLabel(static_cast<std::uint32_t>(r), {});
  }
  if (s.front() == '_') s.remove_prefix(1);
  return AbelianGroupLabel(0, {number(s)});
}

}  // namespace cohere
