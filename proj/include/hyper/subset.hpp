#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyper/config.hpp"

namespace hyper {

/// A subset of a finite carrier {0, ..., n-1}, stored as a bit mask.
/// Every hyperoperation entry is a nonempty SubsetMask.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static constexpr SubsetMask empty() { return SubsetMask(0); }
  static constexpr SubsetMask single(int i) { return SubsetMask(1u << i); }
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 32 ? ~0u : (1u << n) - 1u);
  }
  static SubsetMask of(std::initializer_list<int> members) {
    SubsetMask m;
    for (int i : members) m.add(i);
    return m;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool test(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool is_singleton() const { return count() == 1; }
  /// Index of the only member; mask must be a singleton.
  constexpr int sole_member() const { return std::countr_zero(bits_); }
  constexpr bool fits(int n) const { return (bits_ & ~full(n).bits_) == 0; }

  void add(int i) { bits_ |= (1u << i); }
  void remove(int i) { bits_ &= ~(1u << i); }

  constexpr bool contains(SubsetMask other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  SubsetMask& operator|=(SubsetMask other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  /// Renders "{a, c}" using the given labels (indices when labels empty).
  std::string to_string(const std::vector<std::string>& labels = {}) const {
    std::string out = "{";
    bool first = true;
    for (int i : members()) {
      if (!first) out += ", ";
      first = false;
      out += labels.empty() ? std::to_string(i) : labels.at(i);
    }
    return out + "}";
  }
};

/// Applies a relabeling permutation: member i becomes perm[i].
inline SubsetMask permute(SubsetMask m, const std::vector<int>& perm) {
  SubsetMask out;
  for (int i : m.members()) out.add(perm.at(i));
  return out;
}

}  // namespace hyper
