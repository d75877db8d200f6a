#include "qmdp/rabin.hpp"

#include "qmdp/attractor.hpp"
#include "qmdp/error.hpp"
#include "qmdp/graphalg.hpp"
#include "qmdp/mec.hpp"
#include "qmdp/reach.hpp"
#include "scratch.hpp"

namespace qmdp {

VertexSet as_rabin(const Mdp& mdp, std::span<const Pair> pairs) {
  const std::size_t n = mdp.num_vertices();
  const auto& d = mecs_of(mdp);
  std::vector<char> won(d.mecs.size(), 0);
  for (const auto& p : pairs) {
    // End components of P[Y] never span two MECs, so one decomposition of the
    // union of the candidate remainders answers every MEC for this pair.
    VertexSet y(n);
    for (std::size_t i = 0; i < d.mecs.size(); ++i) {
      if (won[i]) continue;
      const auto& x = d.mecs[i];
      bool meets_l = false;
      std::vector<Vertex> seeds;
      for (Vertex v : x) {
        meets_l = meets_l || p.l.contains(v);
        if (p.u.contains(v)) seeds.push_back(v);
      }
      if (!meets_l) continue;
      const MdpView px(mdp, d.mec_of, static_cast<std::uint32_t>(i), x);
      detail::Lease gone(n);
      for (Vertex a : attract(px, seeds)) gone->set(a, 1);
      for (Vertex v : x)
        if (!gone->touched(v)) y.insert(v);
    }
    if (y.empty()) continue;
    for (const auto& e : mec_decomposition(MdpView(mdp, y)).mecs)
      for (Vertex v : e)
        if (p.l.contains(v)) {
#ifdef QMDP_CHECK_INVARIANTS
          // certificate: e is an end component of P meeting L and avoiding U
          const VertexSet es(n, e);
          if (!is_end_component(MdpView(mdp, es), es) || es.intersects(p.u))
            throw InvariantError("Rabin witness is not a good end component");
#endif
          won[d.mec_of[e.front()]] = 1;
          break;
        }
  }
  VertexSet goal(n);
  for (std::size_t i = 0; i < d.mecs.size(); ++i)
    if (won[i])
      for (Vertex v : d.mecs[i]) goal.insert(v);
  return as_reach_single(mdp, goal);
}

VertexSet as_rabin_disj_query(const Mdp& mdp, std::span<const Pair> pairs) {
  VertexSet out(mdp.num_vertices());
  for (const auto& p : pairs) out |= as_rabin(mdp, std::span<const Pair>(&p, 1));
  return out;
}

}  // namespace qmdp
