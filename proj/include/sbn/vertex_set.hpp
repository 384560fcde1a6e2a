#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace sbn {

using Vertex = int;

/// Hard upper bound on the number of vertices of any graph handled here.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) { return from_bits(std::uint64_t{1} << v); }
  template <typename Range>
  static VertexSet of(const Range& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr Vertex last() const { return 63 - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }
  /// "{0,2,5}"
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member sequences ({0,5} < {1} < {1,2}).
bool lex_less(VertexSet a, VertexSet b);

struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

/// Lexicographic order on sequences of sets, element-wise by lex_less.
bool lex_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

}  // namespace sbn
