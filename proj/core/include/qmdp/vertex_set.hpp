#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace qmdp {

using Vertex = std::uint32_t;

/**
 * Dense membership set over the universe [0, n). Iteration is ascending.
 */
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const { return static_cast<Vertex>(word_ * 64 + std::countr_zero(bits_)); }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& o) const { return word_ == o.word_ && bits_ == o.bits_; }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* s, std::size_t word) : set_(s), word_(word) {
      bits_ = word_ < s->words_.size() ? s->words_[word_] : 0;
      settle();
    }
    void settle() {
      while (bits_ == 0 && word_ < set_->words_.size()) {
        ++word_;
        bits_ = word_ < set_->words_.size() ? set_->words_[word_] : 0;
      }
    }
    const VertexSet* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Vertex v) const noexcept {
    return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  /** Throws std::out_of_range when v is outside the universe. */
  bool insert(Vertex v);
  bool erase(Vertex v);
  void clear();

  std::vector<Vertex> to_vector() const;
  Vertex min() const { return *begin(); }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, words_.size()); }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  /** Complement within the universe. */
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  void check_universe(const VertexSet& o) const;
  void recount();

  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qmdp
