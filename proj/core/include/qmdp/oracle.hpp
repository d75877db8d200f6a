#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"
#include "qmdp/reductions.hpp"

namespace qmdp {

/**
 * Brute-force reference implementations. Nothing here calls the solver
 * kernels (graphalg, attractor, mec); every fixpoint is a plain repeated scan.
 */

/** Largest instance the subset enumeration accepts. */
inline constexpr std::size_t kOracleMaxVertices = 20;

/** Repeated-scan random attractor of w inside the sub-MDP on `alive`. */
VertexSet oracle_attractor(const Mdp& mdp, const VertexSet& alive, const VertexSet& w);

/**
 * Classical almost-sure reachability: targets absorbing, then repeatedly
 * delete the random attractor of everything that cannot reach the targets.
 */
VertexSet oracle_as_reach(const Mdp& mdp, const VertexSet& t);

bool oracle_is_end_component(const Mdp& mdp, const VertexSet& x);

/** All end components satisfying `good`, by subset enumeration (n <= 20). */
std::vector<VertexSet> oracle_good_ecs(const Mdp& mdp, const std::function<bool(const VertexSet&)>& good);
/** Maximal end components by subset enumeration (n <= 20). */
std::vector<VertexSet> oracle_mecs(const Mdp& mdp);

/**
 * Disjunctive safety objective on an MDP, through the equivalent game where
 * random vertices play against player 1, solved on (vertex, visited targets)
 * pairs. Exponential in k; k <= 16.
 */
VertexSet oracle_safety_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets);

/**
 * Reference winning set for any objective: reach and safety by fixpoints,
 * all other kinds as almost-sure reachability of the union of good end
 * components. Disjunctive queries unite and conjunctive queries intersect the
 * per-set answers. Throws UnsupportedError for the conjunctive reachability
 * objective and PreconditionError above 20 vertices.
 */
VertexSet oracle_winning_set(const Mdp& mdp, const ObjectiveSpec& objective);

/** Some a -> b -> c -> a over three distinct vertices. */
bool oracle_triangle(const SourceGraph& g);
/** Some x in S1, y in S2 with x · y = 0. */
bool oracle_ov(const OvInstance& ov);

/**
 * Monte-Carlo sanity layer (not exact, not used for acceptance): fraction of
 * `runs` plays from `start` under the positional `strategy` (successor per
 * player-1 vertex) that hit `target` within `horizon` steps.
 */
double sample_reach_frequency(const Mdp& mdp, const VertexSet& target, const std::vector<Vertex>& strategy,
                              Vertex start, std::size_t runs, std::size_t horizon, std::uint64_t seed);

}  // namespace qmdp
