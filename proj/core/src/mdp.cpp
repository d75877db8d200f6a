#include "qmdp/mdp.hpp"

#include <algorithm>
#include <string>

#include "qmdp/error.hpp"

namespace qmdp {

Mdp::Mdp(std::vector<Owner> owners, std::vector<std::vector<Vertex>> adjacency, BuildOptions opts)
    : owners_(std::move(owners)), cache_(std::make_shared<AnalysisCache>()), reverse_(std::make_shared<Reverse>()) {
  const std::size_t n = owners_.size();
  if (adjacency.size() != n)
    throw ModelError("adjacency has " + std::to_string(adjacency.size()) + " rows for " + std::to_string(n) +
                     " vertices");
  auto norm = std::make_shared<Normalization>();
  std::vector<char> seen(n, 0);
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& succ = adjacency[v];
    if (succ.empty()) {
      if (!opts.self_loop_sinks) throw ModelError("vertex " + std::to_string(v) + " has no outgoing edge");
      succ.push_back(static_cast<Vertex>(v));
      norm->sink_self_loops.push_back(static_cast<Vertex>(v));
    }
    for (Vertex w : succ) {
      if (w >= n) throw ModelError("edge " + std::to_string(v) + " -> " + std::to_string(w) + " out of range");
      if (seen[w]) throw ModelError("duplicate edge " + std::to_string(v) + " -> " + std::to_string(w));
      seen[w] = 1;
    }
    for (Vertex w : succ) seen[w] = 0;
    if (owners_[v] == Owner::Random && succ.size() == 1 && succ[0] == v) {
      owners_[v] = Owner::Player1;
      norm->random_self_loops.push_back(static_cast<Vertex>(v));
    }
    offsets_[v + 1] = offsets_[v] + succ.size();
  }
  targets_.reserve(offsets_[n]);
  for (auto& succ : adjacency) targets_.insert(targets_.end(), succ.begin(), succ.end());
  num_random_ = static_cast<std::size_t>(std::count(owners_.begin(), owners_.end(), Owner::Random));
  normalization_ = std::move(norm);
}

const Mdp::Reverse& Mdp::reverse() const {
  Reverse& r = *reverse_;
  std::call_once(r.once, [this, &r] {
    const std::size_t n = num_vertices();
    r.offsets.assign(n + 1, 0);
    for (Vertex w : targets_) ++r.offsets[w + 1];
    for (std::size_t v = 0; v < n; ++v) r.offsets[v + 1] += r.offsets[v];
    r.sources.resize(targets_.size());
    std::vector<std::size_t> fill(r.offsets.begin(), r.offsets.end() - 1);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e) r.sources[fill[targets_[e]]++] = static_cast<Vertex>(u);
  });
  return r;
}

std::span<const Vertex> Mdp::predecessors(Vertex v) const {
  const auto& r = reverse();
  return {r.sources.data() + r.offsets[v], r.sources.data() + r.offsets[v + 1]};
}

bool Mdp::has_edge(Vertex u, Vertex v) const {
  auto s = successors(u);
  return std::find(s.begin(), s.end(), v) != s.end();
}

std::vector<std::vector<Vertex>> Mdp::adjacency() const {
  std::vector<std::vector<Vertex>> adj(num_vertices());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    auto s = successors(static_cast<Vertex>(v));
    adj[v].assign(s.begin(), s.end());
  }
  return adj;
}

}  // namespace qmdp
