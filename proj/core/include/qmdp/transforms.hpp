#pragma once

#include <span>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"

namespace qmdp {

/** Result of a target gadget substitution. Original ids are kept, new vertices appended. */
struct TransformedInstance {
  Mdp mdp;
  std::vector<VertexSet> targets;
  /** Original vertex -> its image (the `in` vertex for targets); identity here. */
  std::vector<Vertex> image;
};

/**
 * Every target vertex t becomes t_in (player 1, self-loop and edge to t_out)
 * and a new t_out (t's owner and successors). New Buchi targets are the t_in.
 */
TransformedInstance transform_reach_to_buchi(const Mdp& mdp, std::span<const VertexSet> targets);

/**
 * Every target vertex t becomes t_in (random, edges to t_out and t_r), a new
 * t_out (t's owner and successors) and a new t_r (player 1, edge to t_out).
 * New reachability targets are the t_r.
 */
TransformedInstance transform_buchi_to_reach(const Mdp& mdp, std::span<const VertexSet> targets);

/** Conjunctive Buchi as Streett pairs (V, T_i). */
std::vector<Pair> buchi_as_streett(std::size_t n, std::span<const VertexSet> targets);
/** Conjunctive coBuchi as Streett pairs (T_i, ∅). */
std::vector<Pair> cobuchi_as_streett(std::size_t n, std::span<const VertexSet> targets);
/** Disjunctive Buchi as Rabin pairs (T_i, ∅). */
std::vector<Pair> buchi_as_rabin(std::size_t n, std::span<const VertexSet> targets);
/** Disjunctive coBuchi as Rabin pairs (V, T_i). */
std::vector<Pair> cobuchi_as_rabin(std::size_t n, std::span<const VertexSet> targets);

}  // namespace qmdp
