#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/vertex_set.hpp"

namespace qmdp {

/**
 * Restriction of an Mdp to a vertex subset, optionally with reversed edges and
 * with every vertex keeping only its first `cap` in-view out-edges. Global
 * vertex ids are kept. The view does not own its membership structure.
 *
 * Sinks are allowed inside a view.
 */
class MdpView {
 public:
  static constexpr std::size_t no_cap = std::numeric_limits<std::size_t>::max();

  explicit MdpView(const Mdp& mdp);
  /** P[keep]. `keep` must outlive the view. */
  MdpView(const Mdp& mdp, const VertexSet& keep);
  MdpView(const Mdp& mdp, VertexSet&& keep) = delete;
  MdpView(Mdp&& mdp, const VertexSet& keep) = delete;
  explicit MdpView(Mdp&& mdp) = delete;
  /**
   * Vertices v with tags[v] == tag. `members` lists exactly those vertices.
   * `tags` must outlive the view.
   */
  MdpView(const Mdp& mdp, std::span<const std::uint32_t> tags, std::uint32_t tag,
          std::vector<Vertex> members);

  const Mdp& mdp() const noexcept { return *mdp_; }
  std::size_t universe() const noexcept { return mdp_->num_vertices(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool contains(Vertex v) const {
    if (set_ != nullptr) return set_->contains(v);
    if (tags_ != nullptr) return tags_[v] == tag_;
    return v < mdp_->num_vertices();
  }
  Owner owner(Vertex v) const { return mdp_->owner(v); }
  bool is_random(Vertex v) const { return mdp_->is_random(v); }

  bool is_reversed() const noexcept { return reversed_; }
  std::size_t cap() const noexcept { return cap_; }
  MdpView reversed() const;
  MdpView capped(std::size_t cap) const;

  /** Calls f(w) for each in-view successor of v (respecting direction and cap). */
  template <class F>
  void for_each_successor(Vertex v, F&& f) const {
    std::size_t taken = 0;
    for (Vertex w : raw_out(v)) {
      if (!contains(w)) continue;
      if (taken++ == cap_) return;
      f(w);
    }
  }
  /** Calls f(u) for each in-view u with v among u's (capped) successors. */
  template <class F>
  void for_each_predecessor(Vertex v, F&& f) const {
    if (cap_ == no_cap) {
      for (Vertex u : raw_in(v))
        if (contains(u)) f(u);
      return;
    }
    for (Vertex u : raw_in(v))
      if (contains(u) && kept(u, v)) f(u);
  }

  /** Resumable position in a vertex's successor list. */
  struct Cursor {
    std::size_t pos = 0;
    std::size_t taken = 0;
  };
  /** Advances c to the next in-view successor of v. False when exhausted. */
  bool next_successor(Vertex v, Cursor& c, Vertex& out) const {
    auto raw = raw_out(v);
    while (c.pos < raw.size() && c.taken < cap_) {
      const Vertex w = raw[c.pos++];
      if (contains(w)) {
        ++c.taken;
        out = w;
        return true;
      }
    }
    return false;
  }

  /** In-view out-degree before capping. */
  std::size_t out_degree_uncapped(Vertex v) const;
  std::size_t out_degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t count_edges() const;
  bool has_any_edge() const;
  /** (u, v) pairs in vertex order, then adjacency order. */
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  VertexSet vertex_set() const { return VertexSet(universe(), vertices_); }

 private:
  std::span<const Vertex> raw_out(Vertex v) const {
    return reversed_ ? mdp_->predecessors(v) : mdp_->successors(v);
  }
  std::span<const Vertex> raw_in(Vertex v) const {
    return reversed_ ? mdp_->successors(v) : mdp_->predecessors(v);
  }
  bool kept(Vertex u, Vertex v) const;

  const Mdp* mdp_;
  const VertexSet* set_ = nullptr;
  const std::uint32_t* tags_ = nullptr;
  std::uint32_t tag_ = 0;
  std::vector<Vertex> vertices_;
  bool reversed_ = false;
  std::size_t cap_ = no_cap;
};

/** P[keep] as a view. */
inline MdpView induced_sub_mdp(const Mdp& mdp, const VertexSet& keep) { return MdpView(mdp, keep); }
MdpView induced_sub_mdp(const Mdp& mdp, VertexSet&& keep) = delete;

}  // namespace qmdp
