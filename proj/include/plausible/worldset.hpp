#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace plausible {

using World = std::uint32_t;

/// Worlds are dense integers 0..n-1 with n <= kMaxWorlds.
inline constexpr World kMaxWorlds = 64;

/// A subset of a world universe, stored as a bitmask. Bit i set means world i
/// is a member.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  /// {0, ..., n-1}
  static constexpr WorldSet universe(World n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr WorldSet singleton(World w) {
    return WorldSet(std::uint64_t{1} << w);
  }
  static WorldSet from_worlds(const std::vector<World>& worlds) {
    WorldSet s;
    for (World w : worlds) s = s.with(w);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(World w) const { return (bits_ >> w) & 1U; }
  constexpr WorldSet with(World w) const {
    return WorldSet(bits_ | (std::uint64_t{1} << w));
  }
  constexpr bool subset_of(WorldSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Complement relative to {0..n-1}.
  constexpr WorldSet complement(World n) const {
    return WorldSet(~bits_ & universe(n).bits_);
  }
  /// Lowest member; undefined on the empty set.
  constexpr World first() const { return static_cast<World>(std::countr_zero(bits_)); }

  std::vector<World> to_vector() const {
    std::vector<World> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<World>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) {
    return WorldSet(a.bits_ & b.bits_);
  }
  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) {
    return WorldSet(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(WorldSet, WorldSet) = default;
  friend constexpr auto operator<=>(WorldSet a, WorldSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace plausible
