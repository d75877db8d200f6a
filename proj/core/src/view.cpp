#include "qmdp/view.hpp"

#include <numeric>

namespace qmdp {

MdpView::MdpView(const Mdp& mdp) : mdp_(&mdp), vertices_(mdp.num_vertices()) {
  std::iota(vertices_.begin(), vertices_.end(), Vertex{0});
}

MdpView::MdpView(const Mdp& mdp, const VertexSet& keep) : mdp_(&mdp), set_(&keep), vertices_(keep.to_vector()) {}

MdpView::MdpView(const Mdp& mdp, std::span<const std::uint32_t> tags, std::uint32_t tag, std::vector<Vertex> members)
    : mdp_(&mdp), tags_(tags.data()), tag_(tag), vertices_(std::move(members)) {}

MdpView MdpView::reversed() const {
  MdpView r = *this;
  r.reversed_ = !reversed_;
  r.cap_ = no_cap;
  return r;
}

MdpView MdpView::capped(std::size_t cap) const {
  MdpView r = *this;
  r.cap_ = cap;
  return r;
}

bool MdpView::kept(Vertex u, Vertex v) const {
  std::size_t taken = 0;
  for (Vertex w : raw_out(u)) {
    if (!contains(w)) continue;
    if (taken++ == cap_) return false;
    if (w == v) return true;
  }
  return false;
}

std::size_t MdpView::out_degree_uncapped(Vertex v) const {
  std::size_t d = 0;
  for (Vertex w : raw_out(v))
    if (contains(w)) ++d;
  return d;
}

std::size_t MdpView::out_degree(Vertex v) const {
  const std::size_t d = out_degree_uncapped(v);
  return d < cap_ ? d : cap_;
}

bool MdpView::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return kept(u, v);
}

std::size_t MdpView::count_edges() const {
  std::size_t m = 0;
  for (Vertex v : vertices_) m += out_degree(v);
  return m;
}

bool MdpView::has_any_edge() const {
  for (Vertex v : vertices_)
    for (Vertex w : raw_out(v))
      if (contains(w) && cap_ > 0) return true;
  return false;
}

std::vector<std::pair<Vertex, Vertex>> MdpView::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v : vertices_) for_each_successor(v, [&](Vertex w) { out.emplace_back(v, w); });
  return out;
}

}  // namespace qmdp
