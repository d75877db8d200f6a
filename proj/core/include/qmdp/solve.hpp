#pragma once

#include <string>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"
#include "qmdp/streett.hpp"

namespace qmdp {

struct SolveOptions {
  StreettAlgo streett = StreettAlgo::Auto;
  /** Use the linear-time singleton coBuchi algorithm (graphs, singleton targets). */
  bool singleton = false;
};

struct SolveResult {
  VertexSet winning;
  /** Name of the algorithm that produced `winning`. */
  std::string algo;
};

/**
 * Routes an objective to its solver. Conjunctive queries intersect the
 * per-set winning sets. Throws UnsupportedError for the conjunctive
 * reachability objective, the disjunctive safety objective on MDPs, the
 * conjunctive Rabin objective and misuse of `singleton`.
 */
SolveResult solve(const Mdp& mdp, const ObjectiveSpec& objective, const SolveOptions& opts = {});

}  // namespace qmdp
