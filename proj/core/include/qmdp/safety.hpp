#pragma once

#include <span>

#include "qmdp/mdp.hpp"

namespace qmdp {

/** V \ Attr(T): almost-sure Safety(T), i.e. never visit T. */
VertexSet as_safety_single(const Mdp& mdp, const VertexSet& target);
/** Conjunction of Safety(T_i): Safety of the union. */
VertexSet as_safety_conj(const Mdp& mdp, std::span<const VertexSet> targets);
/** Union of the single Safety(T_i) winning sets. */
VertexSet as_safety_disj_query(const Mdp& mdp, std::span<const VertexSet> targets);
/**
 * Disjunctive safety objective on a graph, where it coincides with the query.
 * Throws UnsupportedError when the input has random vertices.
 */
VertexSet as_safety_disj_objective_graph(const Mdp& mdp, std::span<const VertexSet> targets);

}  // namespace qmdp
