#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace eulermin {

// Subset of the edge indices 0..63 of one graph, stored as a bit mask.
// Bit i is edge i in file order.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet single(int edge) { return EdgeSet(std::uint64_t{1} << edge); }
  static constexpr EdgeSet first_n(int count) {
    return EdgeSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int edge) const { return (bits_ >> edge) & 1U; }
  constexpr bool intersects(EdgeSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }
  // Index of the lowest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr EdgeSet operator^(EdgeSet o) const { return EdgeSet(bits_ ^ o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr EdgeSet& operator^=(EdgeSet o) { bits_ ^= o.bits_; return *this; }
  constexpr EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  constexpr EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const EdgeSet&) const = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Vertex subset; bit v-1 is vertex v.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int vertex) { return VertexSet(std::uint64_t{1} << (vertex - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int vertex) const { return (bits_ >> (vertex - 1)) & 1U; }

  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  // 1-based vertex labels in increasing order.
  std::vector<int> vertices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace eulermin
