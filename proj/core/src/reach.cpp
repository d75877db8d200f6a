#include "qmdp/reach.hpp"

#include "qmdp/attractor.hpp"
#include "qmdp/graphalg.hpp"
#include "qmdp/mec.hpp"

namespace qmdp {

std::vector<VertexSet> as_reach_each(const Mdp& mdp, std::span<const VertexSet> targets) {
  const ContractedMdp& c = contraction_of(mdp);
  const MdpView qv(c.quotient);
  std::vector<VertexSet> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    const VertexSet tq = c.project(t);
    const VertexSet s = graph_reach(qv, tq);
    const VertexSet a = extended_attractor(qv, s.complement(), tq);
    out.push_back(c.lift(a.complement()));
  }
  return out;
}

VertexSet as_reach_single(const Mdp& mdp, const VertexSet& target) {
  return as_reach_each(mdp, std::span<const VertexSet>(&target, 1)).front();
}

VertexSet as_reach_disj_query(const Mdp& mdp, std::span<const VertexSet> targets) {
  VertexSet out(mdp.num_vertices());
  for (const auto& w : as_reach_each(mdp, targets)) out |= w;
  return out;
}

VertexSet as_reach_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets) {
  VertexSet all(mdp.num_vertices());
  for (const auto& t : targets) all |= t;
  return as_reach_single(mdp, all);
}

}  // namespace qmdp
