#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"
#include "qmdp/view.hpp"

namespace qmdp {

/** Per-vertex pair memberships plus the ownership tags shared by all states of one solve. */
class StreettIndex {
 public:
  struct Membership {
    std::uint32_t pair;
    bool in_l;
    bool in_u;
  };

  StreettIndex(std::size_t n, std::span<const Pair> pairs);

  std::size_t num_vertices() const noexcept { return tags_.size(); }
  std::size_t num_pairs() const noexcept { return k_; }
  std::span<const Membership> memberships(Vertex v) const {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }
  /** Owning state tag per vertex, kNone when the vertex belongs to no live state. */
  std::span<const std::uint32_t> tags() const noexcept { return tags_; }

 private:
  friend class StreettState;
  std::size_t k_;
  std::vector<std::size_t> offsets_;
  std::vector<Membership> entries_;
  std::vector<std::uint32_t> tags_;
  std::vector<char> bad_flag_;
  std::uint32_t next_tag_ = 0;
};

/**
 * D(X): counters |X ∩ L_i| and |X ∩ U_i| for the pairs X touches, and the
 * bad vertices {v ∈ X | v ∈ L_i and X ∩ U_i = ∅ for some i}. Construct and
 * remove cost O(|vertices| + their pair memberships). A vertex belongs to at
 * most one live state per index.
 */
class StreettState {
 public:
  StreettState(StreettIndex& index, std::vector<Vertex> x);

  /** Throws PreconditionError if a vertex of b is not in X (X is then unchanged). */
  void remove(std::span<const Vertex> b);
  /** Current bad vertices, ascending. */
  std::vector<Vertex> bad();
  /** Members, ascending. */
  const std::vector<Vertex>& members();
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(Vertex v) const { return index_->tags_[v] == tag_; }
  std::uint32_t tag() const noexcept { return tag_; }
  std::size_t l_count(std::uint32_t pair) const;
  std::size_t u_count(std::uint32_t pair) const;
  /** P[X]. Valid until the next remove. */
  MdpView view(const Mdp& mdp);

 private:
  struct Counter {
    std::size_t l = 0;
    std::size_t u = 0;
    std::vector<Vertex> l_members;
  };
  void mark_dead(Counter& c);

  StreettIndex* index_;
  std::uint32_t tag_;
  std::size_t size_ = 0;
  std::vector<Vertex> members_;
  std::vector<Vertex> bad_;
  std::unordered_map<std::uint32_t, Counter> counters_;
};

enum class StreettAlgo { Basic, Impr, Dense, Sparse, Auto };

std::string_view to_string(StreettAlgo algo);
std::optional<StreettAlgo> parse_streett_algo(std::string_view s);
/** Dense when n^2 <= m * sqrt(m log n), sparse otherwise. */
StreettAlgo streett_auto_choice(std::size_t n, std::size_t m);

/** Union of the good end components found by `algo` (Auto resolved by size). */
VertexSet streett_good_union(const Mdp& mdp, std::span<const Pair> pairs, StreettAlgo algo);
/** Almost-sure winning set of the Streett objective given by all pairs. */
VertexSet as_streett(const Mdp& mdp, std::span<const Pair> pairs, StreettAlgo algo);

}  // namespace qmdp
