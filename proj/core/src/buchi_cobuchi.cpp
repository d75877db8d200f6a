#include "qmdp/buchi_cobuchi.hpp"

#include <deque>

#include "qmdp/attractor.hpp"
#include "qmdp/error.hpp"
#include "qmdp/graphalg.hpp"
#include "qmdp/mec.hpp"
#include "qmdp/reach.hpp"

namespace qmdp {
namespace {

VertexSet union_of(std::size_t n, std::span<const VertexSet> sets) {
  VertexSet out(n);
  for (const auto& s : sets) out |= s;
  return out;
}

/** Union of the MECs accepted by `wins`, as a target for as_reach. */
template <class Pred>
VertexSet winning_mecs(const Mdp& mdp, Pred&& wins) {
  const auto& d = mecs_of(mdp);
  VertexSet out(mdp.num_vertices());
  for (std::size_t i = 0; i < d.mecs.size(); ++i)
    if (wins(i, d.mecs[i]))
      for (Vertex v : d.mecs[i]) out.insert(v);
  return out;
}

/** X is not covered by Attr(P[X], X ∩ t). X is MEC number `index`. */
bool escapes(const Mdp& mdp, std::size_t index, const std::vector<Vertex>& x, const VertexSet& t) {
  const auto& d = mecs_of(mdp);
  std::vector<Vertex> seeds;
  for (Vertex v : x)
    if (t.contains(v)) seeds.push_back(v);
  if (seeds.empty()) return true;
  const MdpView px(mdp, d.mec_of, static_cast<std::uint32_t>(index), x);
  return attract(px, seeds).size() < x.size();
}

bool meets(const std::vector<Vertex>& x, const VertexSet& t) {
  for (Vertex v : x)
    if (t.contains(v)) return true;
  return false;
}

}  // namespace

VertexSet as_buchi_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets) {
  const VertexSet all = union_of(mdp.num_vertices(), targets);
  return as_reach_single(mdp, winning_mecs(mdp, [&](std::size_t, const auto& x) { return meets(x, all); }));
}

VertexSet as_buchi_disj_query(const Mdp& mdp, std::span<const VertexSet> targets) {
  std::vector<VertexSet> goals;
  for (const auto& t : targets)
    goals.push_back(winning_mecs(mdp, [&](std::size_t, const auto& x) { return meets(x, t); }));
  return as_reach_disj_query(mdp, goals);
}

VertexSet as_buchi_conj(const Mdp& mdp, std::span<const VertexSet> targets) {
  return as_reach_single(mdp, winning_mecs(mdp, [&](std::size_t, const auto& x) {
                           for (const auto& t : targets)
                             if (!meets(x, t)) return false;
                           return true;
                         }));
}

VertexSet as_cobuchi_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets) {
  return as_reach_single(mdp, winning_mecs(mdp, [&](std::size_t i, const auto& x) {
                           for (const auto& t : targets)
                             if (escapes(mdp, i, x, t)) return true;
                           return false;
                         }));
}

VertexSet as_cobuchi_disj_query(const Mdp& mdp, std::span<const VertexSet> targets) {
  std::vector<VertexSet> goals;
  for (const auto& t : targets)
    goals.push_back(winning_mecs(mdp, [&](std::size_t i, const auto& x) { return escapes(mdp, i, x, t); }));
  return as_reach_disj_query(mdp, goals);
}

VertexSet as_cobuchi_conj(const Mdp& mdp, std::span<const VertexSet> targets) {
  const VertexSet all = union_of(mdp.num_vertices(), targets);
  return as_cobuchi_disj_objective(mdp, std::span<const VertexSet>(&all, 1));
}

VertexSet one_pair_streett_disj(const Mdp& mdp, std::span<const Pair> pairs, bool query) {
  auto pair_wins = [&](std::size_t i, const std::vector<Vertex>& x, const Pair& p) {
    return meets(x, p.u) || escapes(mdp, i, x, p.l);
  };
  if (!query)
    return as_reach_single(mdp, winning_mecs(mdp, [&](std::size_t i, const auto& x) {
                             for (const auto& p : pairs)
                               if (pair_wins(i, x, p)) return true;
                             return false;
                           }));
  std::vector<VertexSet> goals;
  for (const auto& p : pairs)
    goals.push_back(winning_mecs(mdp, [&](std::size_t i, const auto& x) { return pair_wins(i, x, p); }));
  return as_reach_disj_query(mdp, goals);
}

namespace {

void check_singleton_input(const Mdp& mdp, std::span<const VertexSet> targets) {
  if (!mdp.is_graph()) throw UnsupportedError("singleton coBuchi algorithm needs a graph (no random vertices)");
  if (targets.empty()) throw UnsupportedError("singleton coBuchi algorithm needs at least one target");
  for (const auto& t : targets)
    if (t.size() != 1) throw UnsupportedError("singleton coBuchi algorithm needs targets of exactly one vertex");
}

}  // namespace

ZeroOneBfsTrace singleton_zero_one_bfs(const Mdp& graph, const VertexSet& scc, std::span<const VertexSet> targets) {
  check_singleton_input(graph, targets);
  const std::size_t n = graph.num_vertices();
  const VertexSet all = union_of(n, targets);
  if (!all.is_subset_of(scc)) throw PreconditionError("targets must lie inside the component");
  const Vertex s = targets[0].min();
  const auto s_in = static_cast<Vertex>(n);
  ZeroOneBfsTrace trace;
  trace.distinct_targets = all.size();
  trace.level.assign(n + 1, -1);

  std::vector<std::deque<Vertex>> queues(trace.distinct_targets);
  auto push = [&](Vertex v, std::size_t j) {
    if (trace.level[v] >= 0 || j >= queues.size()) return;
    trace.level[v] = static_cast<std::int64_t>(j);
    queues[j].push_back(v);
  };
  push(s, 0);
  for (std::size_t j = 0; j < queues.size(); ++j) {
    while (!queues[j].empty()) {
      const Vertex v = queues[j].front();
      queues[j].pop_front();
      if (v == s_in) {
        trace.cycle_avoids_target = true;
        return trace;
      }
      for (Vertex w : graph.successors(v)) {
        if (!scc.contains(w)) continue;
        if (w == s)
          push(s_in, j + 1);
        else
          push(w, all.contains(w) ? j + 1 : j);
      }
    }
  }
  return trace;
}

VertexSet as_cobuchi_singleton_graph(const Mdp& mdp, std::span<const VertexSet> targets) {
  check_singleton_input(mdp, targets);
  const std::size_t n = mdp.num_vertices();
  const VertexSet all = union_of(n, targets);
  const SccPartition part = sccs(MdpView(mdp));
  std::vector<Vertex> goal;
  for (std::size_t c = 0; c < part.size(); ++c) {
    if (part.trivial[c]) continue;
    const auto& comp = part.components[c];
    std::size_t inside = 0;
    for (Vertex v : comp) inside += all.contains(v) ? 1 : 0;
    bool wins = inside < all.size();
    if (!wins) {
      VertexSet scc(n, comp);
      VertexSet rest = scc;
      rest.erase(targets[0].min());
      const SccPartition sub = sccs(MdpView(mdp, rest));
      for (std::size_t d = 0; d < sub.size() && !wins; ++d) wins = !sub.trivial[d];
      if (!wins && all.size() > 1) wins = singleton_zero_one_bfs(mdp, scc, targets).cycle_avoids_target;
    }
    if (wins) goal.insert(goal.end(), comp.begin(), comp.end());
  }
  return VertexSet(n, graph_reach_list(MdpView(mdp), goal));
}

}  // namespace qmdp
