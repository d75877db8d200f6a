#include "qmdp/attractor.hpp"

#include "scratch.hpp"

namespace qmdp {
namespace {

/**
 * Shared worklist. With `t` set, vertices in t are never attracted and a
 * player-1 self-loop does not count against the vertex.
 */
std::vector<Vertex> run(const MdpView& view, std::span<const Vertex> seeds, const VertexSet* t) {
  detail::Lease in_z(view.universe());
  detail::Lease remaining(view.universe());
  std::vector<Vertex> out;
  auto add = [&](Vertex v) {
    in_z->set(v, 1);
    out.push_back(v);
  };
  for (Vertex s : seeds)
    if (view.contains(s) && !in_z->touched(s) && !(t && t->contains(s))) add(s);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Vertex z = out[head];
    view.for_each_predecessor(z, [&](Vertex u) {
      if (in_z->touched(u) || (t && (u == z || t->contains(u)))) return;
      if (view.is_random(u)) {
        add(u);
        return;
      }
      std::uint32_t left;
      if (remaining->touched(u)) {
        left = remaining->get(u);
      } else {
        left = static_cast<std::uint32_t>(view.out_degree(u));
        if (t && view.has_edge(u, u)) --left;
      }
      remaining->set(u, --left);
      if (left == 0) add(u);
    });
  }
  return out;
}

}  // namespace

std::vector<Vertex> attract(const MdpView& view, std::span<const Vertex> seeds) { return run(view, seeds, nullptr); }

VertexSet random_attractor(const MdpView& view, const VertexSet& w) {
  std::vector<Vertex> seeds = w.to_vector();
  for (Vertex v : view.vertices())
    if (!view.is_random(v) && view.out_degree(v) == 0) seeds.push_back(v);
  return VertexSet(view.universe(), run(view, seeds, nullptr));
}

VertexSet extended_attractor(const MdpView& view, const VertexSet& w, const VertexSet& t) {
  std::vector<Vertex> seeds = w.to_vector();
  for (Vertex v : view.vertices()) {
    if (view.is_random(v)) continue;
    const std::size_t d = view.out_degree(v);
    if (d == 0 || (d == 1 && view.has_edge(v, v))) seeds.push_back(v);
  }
  return VertexSet(view.universe(), run(view, seeds, &t));
}

}  // namespace qmdp
