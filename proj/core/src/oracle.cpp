#include "qmdp/oracle.hpp"

#include <algorithm>

#include "qmdp/error.hpp"
#include "qmdp/random.hpp"

namespace qmdp {
namespace {

void guard(const Mdp& mdp) {
  if (mdp.num_vertices() > kOracleMaxVertices)
    throw PreconditionError("oracle enumeration limited to " + std::to_string(kOracleMaxVertices) + " vertices");
}

/** Vertices of `alive` with a path inside `alive` to `t`; `absorbing` vertices have no outgoing edges. */
VertexSet backward_reach(const Mdp& mdp, const VertexSet& alive, const VertexSet& t, const VertexSet* absorbing) {
  VertexSet r = t & alive;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v : alive) {
      if (r.contains(v) || (absorbing && absorbing->contains(v))) continue;
      for (Vertex w : mdp.successors(v))
        if (r.contains(w)) {
          r.insert(v);
          grew = true;
          break;
        }
    }
  }
  return r;
}

}  // namespace

VertexSet oracle_attractor(const Mdp& mdp, const VertexSet& alive, const VertexSet& w) {
  VertexSet z = w & alive;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v : alive) {
      if (z.contains(v)) continue;
      bool any = false, all = true;
      for (Vertex u : mdp.successors(v)) {
        if (!alive.contains(u)) continue;
        any = any || z.contains(u);
        all = all && z.contains(u);
      }
      if (mdp.is_random(v) ? any : all) {
        z.insert(v);
        grew = true;
      }
    }
  }
  return z;
}

VertexSet oracle_as_reach(const Mdp& mdp, const VertexSet& t) {
  const std::size_t n = mdp.num_vertices();
  VertexSet alive = VertexSet::full(n);
  for (;;) {
    const VertexSet s = backward_reach(mdp, alive, t, &t);
    if (s == alive) return alive;
    // Targets are absorbing: they only keep their (virtual) self-loop, so
    // they are never attracted. Every target lies in s anyway.
    VertexSet z = alive - s;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex v : alive) {
        if (z.contains(v) || t.contains(v)) continue;
        bool any = false, all = true;
        for (Vertex u : mdp.successors(v)) {
          if (!alive.contains(u)) continue;
          any = any || z.contains(u);
          all = all && z.contains(u);
        }
        if (mdp.is_random(v) ? any : all) {
          z.insert(v);
          grew = true;
        }
      }
    }
    alive -= z;
  }
}

bool oracle_is_end_component(const Mdp& mdp, const VertexSet& x) {
  if (x.empty()) return false;
  bool has_edge = false;
  for (Vertex v : x)
    for (Vertex w : mdp.successors(v)) {
      if (x.contains(w)) has_edge = true;
      if (mdp.is_random(v) && !x.contains(w)) return false;
    }
  if (!has_edge) return false;
  const Vertex root = x.min();
  const VertexSet to_root = backward_reach(mdp, x, VertexSet(mdp.num_vertices(), {root}), nullptr);
  if (!(to_root == x)) return false;
  // forward closure from root
  VertexSet from_root(mdp.num_vertices(), {root});
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v : from_root)
      for (Vertex w : mdp.successors(v))
        if (x.contains(w) && from_root.insert(w)) grew = true;
  }
  return from_root == x;
}

std::vector<VertexSet> oracle_good_ecs(const Mdp& mdp, const std::function<bool(const VertexSet&)>& good) {
  guard(mdp);
  const std::size_t n = mdp.num_vertices();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) x.insert(v);
    if (oracle_is_end_component(mdp, x) && good(x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<VertexSet> oracle_mecs(const Mdp& mdp) {
  auto ecs = oracle_good_ecs(mdp, [](const VertexSet&) { return true; });
  std::vector<VertexSet> out;
  for (const auto& x : ecs) {
    bool maximal = true;
    for (const auto& y : ecs)
      if (!(x == y) && x.is_subset_of(y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.min() < b.min(); });
  return out;
}

VertexSet oracle_safety_disj_objective(const Mdp& mdp, std::span<const VertexSet> targets) {
  const std::size_t n = mdp.num_vertices();
  const std::size_t k = targets.size();
  if (k > 16) throw PreconditionError("oracle disjunctive safety limited to 16 targets");
  if (k == 0) return VertexSet::full(n);
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> hit(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < k; ++i)
      if (targets[i].contains(v)) hit[v] |= std::uint32_t{1} << i;
  // lost[v][M]: from v having visited targets M, the random vertices force M = full.
  std::vector<std::vector<char>> lost(n, std::vector<char>(full + 1, 0));
  for (Vertex v = 0; v < n; ++v) lost[v][full] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v = 0; v < n; ++v)
      for (std::uint32_t m = 0; m < full; ++m) {
        if (lost[v][m] || (m & hit[v]) != hit[v]) continue;
        bool any = false, all = true;
        for (Vertex w : mdp.successors(v)) {
          const bool l = lost[w][m | hit[w]] != 0;
          any = any || l;
          all = all && l;
        }
        if (mdp.is_random(v) ? any : all) {
          lost[v][m] = 1;
          grew = true;
        }
      }
  }
  VertexSet win(n);
  for (Vertex v = 0; v < n; ++v)
    if (!lost[v][hit[v]]) win.insert(v);
  return win;
}

namespace {

bool meets(const VertexSet& x, const VertexSet& t) { return x.intersects(t); }

/** Good-EC predicate of the i-th set or pair alone. */
bool single_good(const ObjectiveSpec& o, std::size_t i, const VertexSet& x) {
  switch (o.kind) {
    case ObjectiveKind::Buchi: return meets(x, o.sets[i]);
    case ObjectiveKind::CoBuchi: return !meets(x, o.sets[i]);
    case ObjectiveKind::Streett: return !meets(x, o.pairs[i].l) || meets(x, o.pairs[i].u);
    case ObjectiveKind::Rabin: return meets(x, o.pairs[i].l) && !meets(x, o.pairs[i].u);
    default: break;
  }
  throw InvariantError("no end-component predicate for reach/safety");
}

VertexSet ec_winning(const Mdp& mdp, const std::function<bool(const VertexSet&)>& good) {
  VertexSet u(mdp.num_vertices());
  for (const auto& x : oracle_good_ecs(mdp, good)) u |= x;
  return oracle_as_reach(mdp, u);
}

}  // namespace

VertexSet oracle_winning_set(const Mdp& mdp, const ObjectiveSpec& o) {
  guard(mdp);
  o.validate(mdp.num_vertices());
  const std::size_t n = mdp.num_vertices();
  const std::size_t k = o.k();
  if (o.mode == CombinationMode::ConjQuery) {
    VertexSet w = VertexSet::full(n);
    for (std::size_t i = 0; i < k; ++i) {
      ObjectiveSpec one{o.kind, CombinationMode::Single, {}, {}};
      if (o.uses_pairs())
        one.pairs.push_back(o.pairs[i]);
      else
        one.sets.push_back(o.sets[i]);
      w &= oracle_winning_set(mdp, one);
    }
    return w;
  }
  const bool conj = o.mode == CombinationMode::ConjObjective;
  VertexSet all(n);
  for (const auto& s : o.sets) all |= s;

  if (o.kind == ObjectiveKind::Reach) {
    if (conj) throw UnsupportedError("conjunctive reachability objective has no oracle");
    if (o.mode == CombinationMode::DisjQuery) {
      VertexSet w(n);
      for (const auto& t : o.sets) w |= oracle_as_reach(mdp, t);
      return w;
    }
    return oracle_as_reach(mdp, all);
  }
  if (o.kind == ObjectiveKind::Safety) {
    const VertexSet everything = VertexSet::full(n);
    switch (o.mode) {
      case CombinationMode::DisjQuery: {
        VertexSet w(n);
        for (const auto& t : o.sets) w |= everything - oracle_attractor(mdp, everything, t);
        return w;
      }
      case CombinationMode::DisjObjective: return oracle_safety_disj_objective(mdp, o.sets);
      default: return everything - oracle_attractor(mdp, everything, all);
    }
  }
  if (o.mode == CombinationMode::DisjQuery) {
    VertexSet w(n);
    for (std::size_t i = 0; i < k; ++i) w |= ec_winning(mdp, [&](const VertexSet& x) { return single_good(o, i, x); });
    return w;
  }
  const bool any = o.mode == CombinationMode::DisjObjective;
  return ec_winning(mdp, [&](const VertexSet& x) {
    for (std::size_t i = 0; i < k; ++i)
      if (single_good(o, i, x) == any) return any;
    return !any;
  });
}

bool oracle_triangle(const SourceGraph& g) {
  std::vector<std::vector<char>> e(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) e[u][v] = 1;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b)
      for (std::size_t c = 0; c < g.n; ++c)
        if (a != b && b != c && a != c && e[a][b] && e[b][c] && e[c][a]) return true;
  return false;
}

bool oracle_ov(const OvInstance& ov) {
  for (const auto& x : ov.s1)
    for (const auto& y : ov.s2) {
      bool orth = true;
      for (std::size_t i = 0; i < ov.d; ++i) orth = orth && !(x[i] && y[i]);
      if (orth) return true;
    }
  return false;
}

double sample_reach_frequency(const Mdp& mdp, const VertexSet& target, const std::vector<Vertex>& strategy,
                              Vertex start, std::size_t runs, std::size_t horizon, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t hits = 0;
  for (std::size_t r = 0; r < runs; ++r) {
    Vertex v = start;
    for (std::size_t step = 0; step <= horizon; ++step) {
      if (target.contains(v)) {
        ++hits;
        break;
      }
      const auto succ = mdp.successors(v);
      v = mdp.is_random(v) ? succ[rng.below(succ.size())] : strategy[v];
    }
  }
  return runs == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(runs);
}

}  // namespace qmdp
