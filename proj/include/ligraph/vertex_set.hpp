#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ligraph {

// Largest number of marks a graph may carry; VertexSet is a single 64-bit word.
inline constexpr std::size_t kMaxVertices = 64;

// Subset of the dense vertex indices [0, kMaxVertices) of a graph.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet single(std::size_t v) {
    check_index(v);
    return VertexSet(std::uint64_t{1} << v);
  }
  // {0, ..., n-1}
  static VertexSet range(std::size_t n) {
    if (n > kMaxVertices) throw std::length_error("VertexSet: more than 64 vertices");
    return VertexSet(n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<std::size_t> vs) {
    VertexSet s;
    for (auto v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return v < kMaxVertices && ((bits_ >> v) & 1U); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  VertexSet with(std::size_t v) const { return *this | single(v); }
  VertexSet without(std::size_t v) const { return *this - single(v); }

  // Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  static void check_index(std::size_t v) {
    if (v >= kMaxVertices) throw std::out_of_range("VertexSet: vertex index out of range");
  }

  std::uint64_t bits_ = 0;
};

// Calls f(subset) for every subset of `within`, including the empty set and `within` itself,
// in increasing bit-pattern order.
template <class F>
void for_each_subset(VertexSet within, F&& f) {
  const std::uint64_t mask = within.bits();
  std::uint64_t s = 0;
  while (true) {
    f(VertexSet(s));
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

}  // namespace ligraph
