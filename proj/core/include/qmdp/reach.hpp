#pragma once

#include <span>
#include <vector>

#include "qmdp/mdp.hpp"

namespace qmdp {

/**
 * Almost-sure reachability. The MDP's MECs are contracted once (cached on the
 * Mdp); each target then costs one graph search and one extended attractor on
 * the quotient.
 */
std::vector<VertexSet> as_reach_each(const Mdp& mdp, std::span<const VertexSet> targets);
VertexSet as_reach_single(const Mdp& mdp, const VertexSet& target);
/** Union over i of the almost-sure Reach(T_i) winning sets. */
VertexSet as_reach_disj_query(const Mdp& mdp, std::span<const VertexSet> targets);
/** Reach(T_1) or ... or Reach(T_k), which is Reach of the union. */
VertexSet as_reach_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets);

}  // namespace qmdp
