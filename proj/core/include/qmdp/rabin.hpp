#pragma once

#include <span>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"

namespace qmdp {

/**
 * Rabin objective: for some pair, L_i is visited infinitely often and U_i
 * only finitely often. A MEC X is winning when, for some pair with
 * L_i ∩ X ≠ ∅, an end component of P[X \ Attr(P[X], U_i)] meets L_i.
 */
VertexSet as_rabin(const Mdp& mdp, std::span<const Pair> pairs);
/** Union over pairs of the one-pair Rabin winning sets. */
VertexSet as_rabin_disj_query(const Mdp& mdp, std::span<const Pair> pairs);

}  // namespace qmdp
