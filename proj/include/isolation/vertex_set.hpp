#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace isolation {

using Vertex = std::size_t;

/// Set of vertices drawn from a fixed universe [0, universe).
///
/// Stored as a bit set. Universes of at most 64 vertices live in a single
/// inline word, so copying a small set never allocates; larger universes
/// spill into a heap-allocated word vector.
class VertexSet {
 public:
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((data()[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  std::size_t size() const;
  bool empty() const;

  /// Smallest member, or npos.
  Vertex first() const { return next(0); }
  /// Smallest member >= from, or npos.
  Vertex next(Vertex from) const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b);

  /// Lexicographic order on the sorted member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  std::size_t hash() const;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.at_ == b.at_;
    }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = npos;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, npos}; }

 private:
  std::size_t word_count() const { return (universe_ + 63) >> 6; }
  std::uint64_t* data() { return words_.empty() ? &small_ : words_.data(); }
  const std::uint64_t* data() const { return words_.empty() ? &small_ : words_.data(); }
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace isolation
