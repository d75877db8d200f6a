#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"

namespace qmdp {

/** Buchi(T_1) or ... or Buchi(T_k). With k = 1 this is plain Buchi. */
VertexSet as_buchi_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets);
VertexSet as_buchi_disj_query(const Mdp& mdp, std::span<const VertexSet> targets);
/** Buchi(T_1) and ... and Buchi(T_k): MECs meeting every T_i. */
VertexSet as_buchi_conj(const Mdp& mdp, std::span<const VertexSet> targets);

/** coBuchi(T_1) or ... or coBuchi(T_k). With k = 1 this is plain coBuchi. */
VertexSet as_cobuchi_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets);
VertexSet as_cobuchi_disj_query(const Mdp& mdp, std::span<const VertexSet> targets);
/** Conjunction of coBuchi(T_i): coBuchi of the union. */
VertexSet as_cobuchi_conj(const Mdp& mdp, std::span<const VertexSet> targets);

/**
 * Disjunction of one-pair Streett objectives. With `query` each pair is
 * answered separately and the winning sets are united.
 */
VertexSet one_pair_streett_disj(const Mdp& mdp, std::span<const Pair> pairs, bool query);

/**
 * Disjunctive coBuchi objective on a graph whose targets are single
 * vertices. Throws UnsupportedError for random vertices or larger targets.
 */
VertexSet as_cobuchi_singleton_graph(const Mdp& mdp, std::span<const VertexSet> targets);

/**
 * The 0/1-BFS step of the singleton algorithm, exposed for inspection. Runs
 * inside `scc` (strongly connected, containing every target) with s = the
 * vertex of the first target split into s_out = s and s_in = n. Edges cost 1
 * iff their head is a target or s_in.
 */
struct ZeroOneBfsTrace {
  /** Queue level a vertex entered at, -1 if never; index n is s_in. */
  std::vector<std::int64_t> level;
  /** Number of distinct target vertices. */
  std::size_t distinct_targets = 0;
  /** s_in was dequeued at a level below distinct_targets. */
  bool cycle_avoids_target = false;
};
ZeroOneBfsTrace singleton_zero_one_bfs(const Mdp& graph, const VertexSet& scc, std::span<const VertexSet> targets);

}  // namespace qmdp
