#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"
#include "qmdp/random.hpp"
#include "qmdp/reductions.hpp"

namespace qmdp::testing {

inline VertexSet vs(std::size_t n, std::initializer_list<Vertex> v) { return VertexSet(n, v); }

inline Mdp f1() { return Mdp({Owner::Player1}, {{0}}); }
inline Mdp f2() { return Mdp({Owner::Player1, Owner::Random}, {{0, 1}, {0, 1}}); }
inline Mdp f3() { return Mdp({Owner::Random, Owner::Player1, Owner::Player1}, {{1, 2}, {1}, {2}}); }

inline Mdp graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) adj[u].push_back(v);
  return Mdp(std::vector<Owner>(n, Owner::Player1), std::move(adj));
}

inline std::vector<VertexSet> random_sets(Rng& rng, std::size_t n, std::size_t k, double p = 0.3) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.chance(p)) s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Pair> random_pairs(Rng& rng, std::size_t n, std::size_t k, double p = 0.3) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < k; ++i) {
    auto two = random_sets(rng, n, 2, p);
    out.push_back({two[0], two[1]});
  }
  return out;
}

inline ObjectiveSpec sets_objective(ObjectiveKind kind, CombinationMode mode, std::vector<VertexSet> sets) {
  ObjectiveSpec o;
  o.kind = kind;
  o.mode = mode;
  o.sets = std::move(sets);
  return o;
}

inline ObjectiveSpec pairs_objective(ObjectiveKind kind, CombinationMode mode, std::vector<Pair> pairs) {
  ObjectiveSpec o;
  o.kind = kind;
  o.mode = mode;
  o.pairs = std::move(pairs);
  return o;
}

inline std::string show(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace qmdp::testing
