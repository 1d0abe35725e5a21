#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace irtopo {

using PointId = std::size_t;

/// Spaces are capped at 64 points so a subset fits in one machine word.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of the points {0..n-1} of some space, stored as a bitmask.
class PointSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = PointId;
    using difference_type = std::ptrdiff_t;
    using pointer = const PointId*;
    using reference = PointId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr PointId operator*() const { return static_cast<PointId>(std::countr_zero(rest_)); }
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

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  constexpr PointSet(std::initializer_list<PointId> points) {
    for (PointId p : points) insert(p);
  }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr PointSet single(PointId p) { return PointSet(std::uint64_t{1} << p); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(PointId p) const { return p < 64 && ((bits_ >> p) & 1U) != 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(PointId p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(PointId p) { bits_ &= ~(std::uint64_t{1} << p); }
  constexpr bool is_subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr PointId first() const { return static_cast<PointId>(std::countr_zero(bits_)); }
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<PointId> to_vector() const { return {begin(), end()}; }

  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr PointSet& operator-=(PointSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr PointSet operator|(PointSet a, PointSet b) { return a |= b; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return a &= b; }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return a -= b; }

  constexpr bool operator==(const PointSet&) const = default;

  /// Canonical order: by cardinality, then by bitmask value.
  friend constexpr std::strong_ordering operator<=>(PointSet a, PointSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// "{0,2,3}" using point indices.
  std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for (PointId p : *this) {
      if (!first_item) out += ',';
      out += std::to_string(p);
      first_item = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace irtopo
