#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>

namespace posrep {

using Index = std::size_t;

/// Maximum carrier size; element sets are single machine words.
inline constexpr std::size_t kMaxElements = 64;

/// A set of element indices of one fixed poset. Iteration is ascending.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Index;
    using difference_type = std::ptrdiff_t;
    using pointer = const Index*;
    using reference = Index;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Index operator*() const { return static_cast<Index>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Index> members) {
    for (Index i : members) insert(i);
  }

  static ElementSet singleton(Index i) { return ElementSet(std::uint64_t{1} << i); }
  /// {0, ..., n-1}
  static ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(Index i) const { return (bits_ >> i) & 1U; }
  /// Smallest member; undefined on the empty set.
  Index first() const { return static_cast<Index>(std::countr_zero(bits_)); }

  void insert(Index i) { bits_ |= std::uint64_t{1} << i; }
  void erase(Index i) { bits_ &= ~(std::uint64_t{1} << i); }

  bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  friend ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, ElementSet b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return a -= b; }
  friend bool operator==(ElementSet, ElementSet) = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending index lists: {0} < {0,1} < {1}.
inline bool lex_less(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int i = std::countr_zero(diff);
  const std::uint64_t above = (i == 63) ? 0 : ~std::uint64_t{0} << (i + 1);
  if ((a.bits() >> i) & 1U) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

}  // namespace posrep

template <>
struct std::hash<posrep::ElementSet> {
  std::size_t operator()(posrep::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
