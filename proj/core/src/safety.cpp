#include "qmdp/safety.hpp"

#include "qmdp/attractor.hpp"
#include "qmdp/error.hpp"
#include "qmdp/view.hpp"

namespace qmdp {

VertexSet as_safety_single(const Mdp& mdp, const VertexSet& target) {
  return random_attractor(MdpView(mdp), target).complement();
}

VertexSet as_safety_conj(const Mdp& mdp, std::span<const VertexSet> targets) {
  VertexSet all(mdp.num_vertices());
  for (const auto& t : targets) all |= t;
  return as_safety_single(mdp, all);
}

VertexSet as_safety_disj_query(const Mdp& mdp, std::span<const VertexSet> targets) {
  VertexSet out(mdp.num_vertices());
  for (const auto& t : targets) out |= as_safety_single(mdp, t);
  return out;
}

VertexSet as_safety_disj_objective_graph(const Mdp& mdp, std::span<const VertexSet> targets) {
  if (!mdp.is_graph())
    throw UnsupportedError("disjunctive safety objective is only solved on graphs (input has random vertices)");
  return as_safety_disj_query(mdp, targets);
}

}  // namespace qmdp
