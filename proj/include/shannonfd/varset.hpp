#ifndef SHANNONFD_VARSET_HPP
#define SHANNONFD_VARSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace shannonfd {

// Hard limit on the ground-set size for set operations.
inline constexpr int kMaxVariables = 20;
// Default limit on n for anything that enumerates all 2^n subsets.
inline constexpr int kDefaultEnumerationCap = 16;
// Default limit on n for LP-backed oracles.
inline constexpr int kDefaultOracleCap = 4;

/// A subset of the ground set {0, ..., n-1}, stored as a bitmask. Ordering is
/// by bitmask value, which is the enumeration order used for entropy
/// coordinates and atom labels throughout.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VarSet singleton(int v) { return VarSet(1u << v); }
  static constexpr VarSet full(int n) { return VarSet((1u << n) - 1u); }
  static constexpr VarSet of(std::initializer_list<int> vars) {
    std::uint32_t bits = 0;
    for (int v : vars) bits |= 1u << v;
    return VarSet(bits);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool is_subset_of(VarSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VarSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Index of the smallest member; undefined for the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  constexpr VarSet with(int v) const { return VarSet(bits_ | (1u << v)); }
  constexpr VarSet without(int v) const { return VarSet(bits_ & ~(1u << v)); }

  friend constexpr VarSet operator|(VarSet a, VarSet b) {
    return VarSet(a.bits_ | b.bits_);
  }
  friend constexpr VarSet operator&(VarSet a, VarSet b) {
    return VarSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VarSet operator-(VarSet a, VarSet b) {
    return VarSet(a.bits_ & ~b.bits_);
  }

  friend constexpr auto operator<=>(VarSet, VarSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Members joined by sep, using names[v] when names is nonempty and the
// 1-based index otherwise. The empty set renders as "".
std::string format_set(VarSet s, const std::vector<std::string>& names = {},
                       std::string_view sep = ",");

// Throws kOutOfRange unless 1 <= n <= kMaxVariables.
void check_ground_size(int n);
// Throws kCapExceeded when n > cap (after check_ground_size).
void check_enumeration_cap(int n, int cap);
// Throws kOutOfRange unless s is a subset of {0, ..., n-1}.
void check_within(VarSet s, int n);

}  // namespace shannonfd

#endif  // SHANNONFD_VARSET_HPP
