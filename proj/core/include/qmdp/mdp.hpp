#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <typeindex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmdp/vertex_set.hpp"

namespace qmdp {

enum class Owner : std::uint8_t { Player1, Random };

/**
 * Per-Mdp store for derived analyses (reverse adjacency, MEC decomposition,
 * quotient). Entries are computed once per type and shared by copies.
 */
class AnalysisCache {
 public:
  template <class T, class Fn>
  const T& get_or_compute(Fn&& compute) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = slots_.find(std::type_index(typeid(T)));
    if (it == slots_.end()) {
      auto value = std::make_shared<const T>(std::forward<Fn>(compute)());
      it = slots_.emplace(std::type_index(typeid(T)), std::move(value)).first;
    }
    return *static_cast<const T*>(it->second.get());
  }

 private:
  std::recursive_mutex mu_;
  std::unordered_map<std::type_index, std::shared_ptr<const void>> slots_;
};

struct BuildOptions {
  /** Give every vertex without successors a self-loop instead of rejecting it. */
  bool self_loop_sinks = false;
};

/** What validation rewrote while building an Mdp. */
struct Normalization {
  /** Random vertices whose only edge was a self-loop, now owned by player 1. */
  std::vector<Vertex> random_self_loops;
  /** Sinks that received a self-loop (only with BuildOptions::self_loop_sinks). */
  std::vector<Vertex> sink_self_loops;
};

/**
 * Finite MDP with uniform transitions at random vertices. Adjacency keeps the
 * order edges were supplied in. Immutable after construction.
 */
class Mdp {
 public:
  Mdp() : Mdp(std::vector<Owner>{}, {}) {}
  /**
   * Validates and builds. Throws ModelError on duplicate edges, out-of-range
   * endpoints or (unless opts.self_loop_sinks) vertices without successors.
   */
  Mdp(std::vector<Owner> owners, std::vector<std::vector<Vertex>> adjacency, BuildOptions opts = {});

  std::size_t num_vertices() const noexcept { return owners_.size(); }
  std::size_t num_edges() const noexcept { return targets_.size(); }

  Owner owner(Vertex v) const { return owners_[v]; }
  bool is_random(Vertex v) const { return owners_[v] == Owner::Random; }
  /** True when no vertex is random. */
  bool is_graph() const noexcept { return num_random_ == 0; }
  std::size_t num_random() const noexcept { return num_random_; }

  std::span<const Vertex> successors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  /** Predecessors ordered by ascending source. Built on first use. */
  std::span<const Vertex> predecessors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool has_self_loop(Vertex v) const { return has_edge(v, v); }

  const Normalization& normalization() const noexcept { return *normalization_; }
  AnalysisCache& cache() const { return *cache_; }

  std::vector<Owner> owners() const { return owners_; }
  std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const Mdp& a, const Mdp& b) {
    return a.owners_ == b.owners_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  struct Reverse {
    std::once_flag once;
    std::vector<std::size_t> offsets;
    std::vector<Vertex> sources;
  };
  const Reverse& reverse() const;

  std::vector<Owner> owners_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::size_t num_random_ = 0;
  std::shared_ptr<const Normalization> normalization_;
  std::shared_ptr<AnalysisCache> cache_;
  std::shared_ptr<Reverse> reverse_;
};

}  // namespace qmdp
