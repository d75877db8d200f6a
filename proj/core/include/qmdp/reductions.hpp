#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"

namespace qmdp {

/** Simple directed graph: no self-loops, no duplicate edges. */
struct SourceGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  /** Optional vertex names, used in instance metadata. */
  std::vector<std::string> names;

  /** Throws ModelError if not simple or out of range. */
  void validate() const;
  std::string name(Vertex v) const;
};

/** Two sets of d-bit vectors. */
struct OvInstance {
  std::size_t d = 0;
  std::vector<std::vector<std::uint8_t>> s1;
  std::vector<std::vector<std::uint8_t>> s2;

  /** Throws ModelError unless d >= 1, both sets non-empty, all vectors d long and 0/1. */
  void validate() const;
};

struct InstanceInfo {
  std::string generator;
  std::uint64_t seed = 0;
  /** The vertex whose membership carries the verdict. */
  Vertex s = 0;
  std::vector<std::string> names;
  /** Normalisations applied to keep every vertex with a successor, etc. */
  std::vector<std::string> notes;
};

struct Instance {
  Mdp mdp;
  ObjectiveSpec objective;
  InstanceInfo info;
};

/**
 * Triangle detection to disjunctive reachability query.
 * Vertices: s = 0, V^1..V^4 (v^i = i*n - n + 1 + v), then g_v = 4n + 1 + v.
 * s -> v^1, v^i -> u^{i+1} for (v,u) in E (i <= 3), v^4 -> v^1 and v^4 -> g_v.
 * V^4 is random. g_v carries a self-loop; so does any v^i (i <= 3) left
 * without successors. Targets {g_v}. Triangle iff s wins.
 */
Instance gen_triangle_reach(const SourceGraph& g);

/**
 * OV to disjunctive reachability query.
 * Vertices: s = 0, S1, coordinates c_0..c_{d'-1}, S2, then g_y per y in S2.
 * s -> x, x -> c_i if x_i = 1, c_i -> y if y_i = 0, y -> s and y -> g_y.
 * S1 and S2 are random. If some x is all-zero a padding coordinate is added
 * (1 in every x, 0 in every y). A coordinate without successors and every
 * g_y get a self-loop. Targets {g_y}. Orthogonal pair iff s wins.
 */
Instance gen_ov_reach(const OvInstance& ov);

/**
 * Triangle detection to disjunctive safety on a graph.
 * Vertices: s = 0, V^1..V^4 as above, then a trap vertex when needed.
 * s -> v^1, v^i -> u^{i+1} for (v,u) in E, v^4 -> s. Vertices of V^1..V^3
 * without successors go to the trap, which loops and lies in every target.
 * T_v = (V^1 \ {v^1}) ∪ (V^4 \ {v^4}) (∪ {trap}).
 */
Instance gen_triangle_safety(const SourceGraph& g);

/**
 * As gen_triangle_safety, with s reaching V^1 through a balanced binary
 * out-tree rooted at s and V^4 returning through a binary in-tree into s.
 * Internal tree nodes follow V^4 (out-tree first, then in-tree). T_v holds,
 * for every level, the sibling of the tree path to v^1 and to v^4.
 * |T_v| <= 2 ceil(log2 n) (+1 with a trap).
 */
Instance gen_triangle_safety_tree(const SourceGraph& g);

/**
 * OV to disjunctive safety query.
 * Vertices: s = 0, S1, coordinates, S2' (S2, then the all-ones vector if it
 * was absent, then the padding gadget if used). s -> x, x -> c_i if x_i = 1,
 * c_i -> y if y_i = 1, y -> s. s and S2' are player-1, S1 and coordinates
 * random. Targets {y} for every y in S2'. If some x is all-zero a padding
 * coordinate is added that every x has, no vector of S2 or the all-ones
 * vector has, and only the gadget vector e_pad has; s can never avoid e_pad.
 */
Instance gen_ov_safety(const OvInstance& ov);

/** Each ordered pair u != v becomes an edge with probability p. */
SourceGraph random_source_graph(std::size_t n, double p, std::uint64_t seed);
/** |S1| = |S2| = count; each bit is 1 with probability `density`. */
OvInstance random_ov(std::size_t count, std::size_t d, std::uint64_t seed, double density = 0.5);

struct RandomMdpOptions {
  /** Probability that a vertex is random. */
  double random_share = 0.5;
  /**
   * With block > 0, vertices are cut into consecutive blocks of this size.
   * An edge stays inside its block, except with probability `cross` it goes
   * to a uniformly drawn vertex of a later block. Gives many MECs.
   */
  std::size_t block = 0;
  double cross = 0.1;
};
/**
 * n vertices and min(m, n^2) distinct edges (at least n). Every vertex first
 * gets one successor, the remaining edges are drawn uniformly (or per block).
 * In block mode fewer than m edges result when the blocks fill up.
 */
Mdp random_mdp(std::size_t n, std::size_t m, std::uint64_t seed, RandomMdpOptions opts = {});
/** Strongly connected graph: a random Hamiltonian cycle plus extra edges up to m. */
Mdp random_strongly_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/** Source-problem figures. */
SourceGraph figure_triangle_graph();  // ({a,b,c}, {(a,b),(b,a),(b,c),(c,a)})
SourceGraph figure_safety_graph();    // ({a,b,c,d}, {(a,b),(b,a),(b,c),(c,a),(c,d),(d,a)})
OvInstance figure_ov_reach();         // S1 = {100, 111, 011}, S2 = {110, 010, 001}
OvInstance figure_ov_safety();        // S1 as above, S2 = {110, 111, 010, 001}

}  // namespace qmdp
