#include "qmdp/transforms.hpp"

namespace qmdp {
namespace {

TransformedInstance substitute(const Mdp& mdp, std::span<const VertexSet> targets, bool to_reach) {
  const std::size_t n = mdp.num_vertices();
  VertexSet all(n);
  for (const auto& t : targets) all |= t;
  std::vector<Owner> owners = mdp.owners();
  std::vector<std::vector<Vertex>> adj = mdp.adjacency();
  std::vector<Vertex> marker(n, 0);  // t -> t_in's replacement target (t_in itself or t_r)
  for (Vertex t : all) {
    const auto out = static_cast<Vertex>(owners.size());
    owners.push_back(mdp.owner(t));
    adj.push_back(adj[t]);
    if (to_reach) {
      const auto r = static_cast<Vertex>(owners.size());
      owners.push_back(Owner::Player1);
      adj.push_back({out});
      owners[t] = Owner::Random;
      adj[t] = {out, r};
      marker[t] = r;
    } else {
      owners[t] = Owner::Player1;
      adj[t] = {t, out};
      marker[t] = t;
    }
  }
  const std::size_t total = owners.size();
  TransformedInstance res{Mdp(std::move(owners), std::move(adj)), {}, {}};
  for (const auto& t : targets) {
    VertexSet s(total);
    for (Vertex v : t) s.insert(marker[v]);
    res.targets.push_back(std::move(s));
  }
  res.image.resize(n);
  for (Vertex v = 0; v < n; ++v) res.image[v] = v;
  return res;
}

}  // namespace

TransformedInstance transform_reach_to_buchi(const Mdp& mdp, std::span<const VertexSet> targets) {
  return substitute(mdp, targets, false);
}

TransformedInstance transform_buchi_to_reach(const Mdp& mdp, std::span<const VertexSet> targets) {
  return substitute(mdp, targets, true);
}

std::vector<Pair> buchi_as_streett(std::size_t n, std::span<const VertexSet> targets) {
  std::vector<Pair> out;
  for (const auto& t : targets) out.push_back({VertexSet::full(n), t});
  return out;
}

std::vector<Pair> cobuchi_as_streett(std::size_t n, std::span<const VertexSet> targets) {
  std::vector<Pair> out;
  for (const auto& t : targets) out.push_back({t, VertexSet(n)});
  return out;
}

std::vector<Pair> buchi_as_rabin(std::size_t n, std::span<const VertexSet> targets) {
  std::vector<Pair> out;
  for (const auto& t : targets) out.push_back({t, VertexSet(n)});
  return out;
}

std::vector<Pair> cobuchi_as_rabin(std::size_t n, std::span<const VertexSet> targets) {
  std::vector<Pair> out;
  for (const auto& t : targets) out.push_back({VertexSet::full(n), t});
  return out;
}

}  // namespace qmdp
