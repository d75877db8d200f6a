#pragma once

#include <cstdint>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/view.hpp"

namespace qmdp {

struct MecDecomposition {
  /** Each MEC ascending; MECs ordered by smallest vertex. */
  std::vector<std::vector<Vertex>> mecs;
  /** View vertices in no MEC, ascending. */
  std::vector<Vertex> residual;
  /** MEC index per global vertex, kNone otherwise. */
  std::vector<std::uint32_t> mec_of;
};

/** Non-empty, strongly connected with an edge, and random vertices keep all their in-view edges inside x. */
bool is_end_component(const MdpView& view, const VertexSet& x);

/**
 * Maximal end components by repeated SCC refinement: inside each SCC the
 * attractor of its random vertices with an edge leaving it is removed, until
 * the SCCs are stable. Edges leaving the view do not count.
 */
MecDecomposition mec_decomposition(const MdpView& view);

/** Whole-MDP decomposition, computed once per Mdp and shared by all solvers. */
const MecDecomposition& mecs_of(const Mdp& mdp);

/**
 * Quotient with every MEC collapsed into one player-1 vertex carrying a
 * self-loop. Quotient ids follow the smallest original vertex; parallel
 * edges are merged and successors are listed in ascending quotient id.
 */
struct ContractedMdp {
  Mdp quotient;
  /** Original vertex -> quotient vertex. */
  std::vector<Vertex> image;
  /** Quotient vertex -> original vertices, ascending. */
  std::vector<std::vector<Vertex>> preimage;

  VertexSet project(const VertexSet& original) const;
  VertexSet lift(const VertexSet& quotient_set) const;
};

ContractedMdp contract_mecs(const Mdp& mdp, const MecDecomposition& mecs);
/** Cached contract_mecs(mdp, mecs_of(mdp)). */
const ContractedMdp& contraction_of(const Mdp& mdp);

}  // namespace qmdp
