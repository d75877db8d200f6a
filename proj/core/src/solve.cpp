#include "qmdp/solve.hpp"

#include "qmdp/buchi_cobuchi.hpp"
#include "qmdp/error.hpp"
#include "qmdp/rabin.hpp"
#include "qmdp/reach.hpp"
#include "qmdp/safety.hpp"

namespace qmdp {
namespace {

ObjectiveSpec single_part(const ObjectiveSpec& o, std::size_t i) {
  ObjectiveSpec one;
  one.kind = o.kind;
  one.mode = CombinationMode::Single;
  if (o.uses_pairs())
    one.pairs.push_back(o.pairs[i]);
  else
    one.sets.push_back(o.sets[i]);
  return one;
}

SolveResult reach(const Mdp& mdp, const ObjectiveSpec& o) {
  switch (o.mode) {
    case CombinationMode::Single: return {as_reach_single(mdp, o.sets[0]), "reach"};
    case CombinationMode::DisjObjective: return {as_reach_disj_objective(mdp, o.sets), "reach-union"};
    case CombinationMode::DisjQuery: return {as_reach_disj_query(mdp, o.sets), "reach-disj-query"};
    default: throw UnsupportedError("conjunctive reachability objective is not supported");
  }
}

SolveResult safety(const Mdp& mdp, const ObjectiveSpec& o) {
  switch (o.mode) {
    case CombinationMode::Single: return {as_safety_single(mdp, o.sets[0]), "safety"};
    case CombinationMode::ConjObjective: return {as_safety_conj(mdp, o.sets), "safety-union"};
    case CombinationMode::DisjQuery: return {as_safety_disj_query(mdp, o.sets), "safety-disj-query"};
    case CombinationMode::DisjObjective:
      if (!mdp.is_graph())
        throw UnsupportedError("disjunctive safety objective on an MDP with random vertices is not supported");
      return {as_safety_disj_objective_graph(mdp, o.sets), "safety-disj-graph"};
    default: break;
  }
  throw InvariantError("unreachable safety mode");
}

SolveResult buchi(const Mdp& mdp, const ObjectiveSpec& o) {
  switch (o.mode) {
    case CombinationMode::Single:
    case CombinationMode::DisjObjective: return {as_buchi_disj_objective(mdp, o.sets), "buchi-disj-obj"};
    case CombinationMode::DisjQuery: return {as_buchi_disj_query(mdp, o.sets), "buchi-disj-query"};
    case CombinationMode::ConjObjective: return {as_buchi_conj(mdp, o.sets), "buchi-conj"};
    default: break;
  }
  throw InvariantError("unreachable buchi mode");
}

SolveResult cobuchi(const Mdp& mdp, const ObjectiveSpec& o, bool singleton) {
  if (singleton) {
    if (o.mode == CombinationMode::ConjObjective)
      throw UnsupportedError("--singleton applies to disjunctive coBuchi only");
    return {as_cobuchi_singleton_graph(mdp, o.sets), "cobuchi-singleton"};
  }
  switch (o.mode) {
    case CombinationMode::Single:
    case CombinationMode::DisjObjective: return {as_cobuchi_disj_objective(mdp, o.sets), "cobuchi-disj-obj"};
    case CombinationMode::DisjQuery: return {as_cobuchi_disj_query(mdp, o.sets), "cobuchi-disj-query"};
    case CombinationMode::ConjObjective: return {as_cobuchi_conj(mdp, o.sets), "cobuchi-conj"};
    default: break;
  }
  throw InvariantError("unreachable cobuchi mode");
}

SolveResult streett(const Mdp& mdp, const ObjectiveSpec& o, StreettAlgo algo) {
  switch (o.mode) {
    case CombinationMode::Single:
    case CombinationMode::ConjObjective: {
      const StreettAlgo used = algo == StreettAlgo::Auto ? streett_auto_choice(mdp.num_vertices(), mdp.num_edges()) : algo;
      return {as_streett(mdp, o.pairs, used), "streett-" + std::string(to_string(used))};
    }
    case CombinationMode::DisjObjective: return {one_pair_streett_disj(mdp, o.pairs, false), "streett-disj-obj"};
    case CombinationMode::DisjQuery: return {one_pair_streett_disj(mdp, o.pairs, true), "streett-disj-query"};
    default: break;
  }
  throw InvariantError("unreachable streett mode");
}

SolveResult rabin(const Mdp& mdp, const ObjectiveSpec& o) {
  switch (o.mode) {
    case CombinationMode::Single:
    case CombinationMode::DisjObjective: return {as_rabin(mdp, o.pairs), "rabin"};
    case CombinationMode::DisjQuery: return {as_rabin_disj_query(mdp, o.pairs), "rabin-disj-query"};
    default: throw UnsupportedError("conjunctive Rabin objective is not supported");
  }
}

}  // namespace

SolveResult solve(const Mdp& mdp, const ObjectiveSpec& o, const SolveOptions& opts) {
  o.validate(mdp.num_vertices());
  if (opts.singleton && o.kind != ObjectiveKind::CoBuchi)
    throw UnsupportedError("--singleton applies to coBuchi objectives only");
  if (o.mode == CombinationMode::ConjQuery) {
    SolveResult r{VertexSet::full(mdp.num_vertices()), ""};
    for (std::size_t i = 0; i < o.k(); ++i) {
      auto part = solve(mdp, single_part(o, i), opts);
      r.winning &= part.winning;
      r.algo = part.algo + "-conj-query";
    }
    return r;
  }
  switch (o.kind) {
    case ObjectiveKind::Reach: return reach(mdp, o);
    case ObjectiveKind::Safety: return safety(mdp, o);
    case ObjectiveKind::Buchi: return buchi(mdp, o);
    case ObjectiveKind::CoBuchi: return cobuchi(mdp, o, opts.singleton);
    case ObjectiveKind::Streett: return streett(mdp, o, opts.streett);
    case ObjectiveKind::Rabin: return rabin(mdp, o);
  }
  throw InvariantError("unreachable objective kind");
}

}  // namespace qmdp
