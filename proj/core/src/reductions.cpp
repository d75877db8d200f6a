#include "qmdp/reductions.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "qmdp/error.hpp"
#include "qmdp/random.hpp"

namespace qmdp {

void SourceGraph::validate() const {
  if (n == 0) throw ModelError("source graph needs at least one vertex");
  std::unordered_set<std::uint64_t> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ModelError("source edge out of range");
    if (u == v) throw ModelError("source graph must not have self-loops");
    if (!seen.insert(static_cast<std::uint64_t>(u) * n + v).second) throw ModelError("duplicate source edge");
  }
}

std::string SourceGraph::name(Vertex v) const { return v < names.size() ? names[v] : "v" + std::to_string(v); }

void OvInstance::validate() const {
  if (d == 0) throw ModelError("OV instance needs d >= 1");
  if (s1.empty() || s2.empty()) throw ModelError("OV instance needs non-empty S1 and S2");
  for (const auto* set : {&s1, &s2})
    for (const auto& x : *set) {
      if (x.size() != d) throw ModelError("OV vector of wrong length");
      for (auto b : x)
        if (b > 1) throw ModelError("OV vector entries must be 0 or 1");
    }
}

namespace {

constexpr Vertex kNoTrap = ~Vertex{0};

std::string bits(const std::vector<std::uint8_t>& x) {
  std::string s;
  for (auto b : x) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<std::vector<Vertex>> out_lists(const SourceGraph& g) {
  std::vector<std::vector<Vertex>> out(g.n);
  for (auto [u, v] : g.edges) out[u].push_back(v);
  return out;
}

/** v^i for i in 1..4. */
Vertex copy_id(std::size_t n, std::size_t i, Vertex v) { return static_cast<Vertex>((i - 1) * n + 1 + v); }

struct Builder {
  std::vector<Owner> owners;
  std::vector<std::vector<Vertex>> adj;
  std::vector<std::string> names;

  Vertex add(Owner o, std::string name) {
    owners.push_back(o);
    adj.emplace_back();
    names.push_back(std::move(name));
    return static_cast<Vertex>(owners.size() - 1);
  }
  Mdp build() { return Mdp(owners, adj); }
};

Builder copies(const SourceGraph& g, Owner last) {
  Builder b;
  b.add(Owner::Player1, "s");
  for (std::size_t i = 1; i <= 4; ++i)
    for (Vertex v = 0; v < g.n; ++v) b.add(i == 4 ? last : Owner::Player1, g.name(v) + "^" + std::to_string(i));
  const auto out = out_lists(g);
  for (Vertex v = 0; v < g.n; ++v) b.adj[0].push_back(copy_id(g.n, 1, v));
  for (std::size_t i = 1; i <= 3; ++i)
    for (Vertex v = 0; v < g.n; ++v)
      for (Vertex u : out[v]) b.adj[copy_id(g.n, i, v)].push_back(copy_id(g.n, i + 1, u));
  return b;
}

}  // namespace

Instance gen_triangle_reach(const SourceGraph& g) {
  g.validate();
  const std::size_t n = g.n;
  Builder b = copies(g, Owner::Random);
  InstanceInfo info{"triangle-reach", 0, 0, {}, {}};
  std::size_t loops = 0;
  for (std::size_t i = 1; i <= 3; ++i)
    for (Vertex v = 0; v < n; ++v)
      if (b.adj[copy_id(n, i, v)].empty()) {
        b.adj[copy_id(n, i, v)].push_back(copy_id(n, i, v));
        ++loops;
      }
  if (loops > 0) info.notes.push_back("self-loop added to " + std::to_string(loops) + " copy vertices without successors");
  ObjectiveSpec spec{ObjectiveKind::Reach, CombinationMode::DisjQuery, {}, {}};
  std::vector<Vertex> goals;
  for (Vertex v = 0; v < n; ++v) goals.push_back(b.add(Owner::Player1, "g_" + g.name(v)));
  for (Vertex v = 0; v < n; ++v) {
    b.adj[copy_id(n, 4, v)] = {copy_id(n, 1, v), goals[v]};
    b.adj[goals[v]] = {goals[v]};
  }
  info.notes.push_back("absorbing target vertices g_v carry a self-loop");
  for (Vertex v = 0; v < n; ++v) spec.sets.push_back(VertexSet(b.owners.size(), {goals[v]}));
  info.names = b.names;
  return Instance{b.build(), std::move(spec), std::move(info)};
}

Instance gen_triangle_safety(const SourceGraph& g) {
  g.validate();
  const std::size_t n = g.n;
  Builder b = copies(g, Owner::Player1);
  InstanceInfo info{"triangle-safety", 0, 0, {}, {}};
  for (Vertex v = 0; v < n; ++v) b.adj[copy_id(n, 4, v)] = {0};
  std::vector<Vertex> dead;
  for (std::size_t i = 1; i <= 3; ++i)
    for (Vertex v = 0; v < n; ++v)
      if (b.adj[copy_id(n, i, v)].empty()) dead.push_back(copy_id(n, i, v));
  Vertex trap = kNoTrap;
  if (!dead.empty()) {
    trap = b.add(Owner::Player1, "trap");
    b.adj[trap] = {trap};
    for (Vertex v : dead) b.adj[v] = {trap};
    info.notes.push_back(std::to_string(dead.size()) + " dead-end copy vertices lead to a trap inside every target");
  }
  ObjectiveSpec spec{ObjectiveKind::Safety, CombinationMode::DisjObjective, {}, {}};
  const std::size_t total = b.owners.size();
  for (Vertex v = 0; v < n; ++v) {
    VertexSet t(total);
    for (Vertex u = 0; u < n; ++u)
      if (u != v) {
        t.insert(copy_id(n, 1, u));
        t.insert(copy_id(n, 4, u));
      }
    if (trap != kNoTrap) t.insert(trap);
    spec.sets.push_back(std::move(t));
  }
  info.names = b.names;
  return Instance{b.build(), std::move(spec), std::move(info)};
}

Instance gen_triangle_safety_tree(const SourceGraph& g) {
  g.validate();
  const std::size_t n = g.n;
  Builder b = copies(g, Owner::Player1);
  InstanceInfo info{"triangle-safety-tree", 0, 0, {}, {}};
  b.adj[0].clear();
  std::vector<std::vector<Vertex>> siblings(n);
  std::size_t x_count = 0, y_count = 0;

  // Out-tree: node(range) -> node(left half), node(right half); the root is s.
  std::function<Vertex(std::size_t, std::size_t, bool)> down = [&](std::size_t lo, std::size_t hi, bool root) {
    if (hi - lo == 1) {
      const Vertex leaf = copy_id(n, 1, static_cast<Vertex>(lo));
      if (root) b.adj[0].push_back(leaf);
      return root ? Vertex{0} : leaf;
    }
    const Vertex node = root ? Vertex{0} : b.add(Owner::Player1, "x" + std::to_string(++x_count));
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const Vertex l = down(lo, mid, false);
    const Vertex r = down(mid, hi, false);
    b.adj[node] = {l, r};
    for (std::size_t v = lo; v < mid; ++v) siblings[v].push_back(r);
    for (std::size_t v = mid; v < hi; ++v) siblings[v].push_back(l);
    return node;
  };
  // In-tree: leaves v^4 -> parent -> ... -> s.
  std::function<Vertex(std::size_t, std::size_t, bool)> up = [&](std::size_t lo, std::size_t hi, bool root) {
    if (hi - lo == 1) {
      const Vertex leaf = copy_id(n, 4, static_cast<Vertex>(lo));
      if (root) b.adj[leaf] = {0};
      return leaf;
    }
    const Vertex node = root ? Vertex{0} : b.add(Owner::Player1, "y" + std::to_string(++y_count));
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const Vertex l = up(lo, mid, false);
    const Vertex r = up(mid, hi, false);
    b.adj[l] = {node};
    b.adj[r] = {node};
    for (std::size_t v = lo; v < mid; ++v) siblings[v].push_back(r);
    for (std::size_t v = mid; v < hi; ++v) siblings[v].push_back(l);
    return node;
  };
  down(0, n, true);
  up(0, n, true);

  std::vector<Vertex> dead;
  for (std::size_t i = 1; i <= 3; ++i)
    for (Vertex v = 0; v < n; ++v)
      if (b.adj[copy_id(n, i, v)].empty()) dead.push_back(copy_id(n, i, v));
  Vertex trap = kNoTrap;
  if (!dead.empty()) {
    trap = b.add(Owner::Player1, "trap");
    b.adj[trap] = {trap};
    for (Vertex v : dead) b.adj[v] = {trap};
    info.notes.push_back(std::to_string(dead.size()) + " dead-end copy vertices lead to a trap inside every target");
  }
  ObjectiveSpec spec{ObjectiveKind::Safety, CombinationMode::DisjObjective, {}, {}};
  const std::size_t total = b.owners.size();
  for (Vertex v = 0; v < n; ++v) {
    VertexSet t(total, siblings[v]);
    if (trap != kNoTrap) t.insert(trap);
    spec.sets.push_back(std::move(t));
  }
  info.names = b.names;
  return Instance{b.build(), std::move(spec), std::move(info)};
}

Instance gen_ov_reach(const OvInstance& ov) {
  ov.validate();
  const std::size_t d = ov.d;
  const bool pad = std::any_of(ov.s1.begin(), ov.s1.end(),
                               [](const auto& x) { return std::none_of(x.begin(), x.end(), [](auto b) { return b; }); });
  const std::size_t coords = d + (pad ? 1 : 0);
  Builder b;
  InstanceInfo info{"ov-reach", 0, 0, {}, {}};
  b.add(Owner::Player1, "s");
  std::vector<Vertex> xs, cs, ys, gs;
  for (const auto& x : ov.s1) xs.push_back(b.add(Owner::Random, "x:" + bits(x)));
  for (std::size_t i = 0; i < coords; ++i) cs.push_back(b.add(Owner::Player1, i < d ? "c" + std::to_string(i) : "c_pad"));
  for (const auto& y : ov.s2) ys.push_back(b.add(Owner::Random, "y:" + bits(y)));
  for (const auto& y : ov.s2) gs.push_back(b.add(Owner::Player1, "g:" + bits(y)));
  b.adj[0] = xs;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i)
      if (ov.s1[j][i]) b.adj[xs[j]].push_back(cs[i]);
    if (pad) b.adj[xs[j]].push_back(cs[d]);
  }
  std::size_t loops = 0;
  for (std::size_t i = 0; i < coords; ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (i == d || !ov.s2[j][i]) b.adj[cs[i]].push_back(ys[j]);
    if (b.adj[cs[i]].empty()) {
      b.adj[cs[i]].push_back(cs[i]);
      ++loops;
    }
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    b.adj[ys[j]] = {0, gs[j]};
    b.adj[gs[j]] = {gs[j]};
  }
  if (pad) info.notes.push_back("padding coordinate added: S1 has an all-zero vector");
  if (loops > 0) info.notes.push_back("self-loop added to " + std::to_string(loops) + " coordinates without successors");
  info.notes.push_back("absorbing target vertices g_y carry a self-loop");
  ObjectiveSpec spec{ObjectiveKind::Reach, CombinationMode::DisjQuery, {}, {}};
  for (Vertex gy : gs) spec.sets.push_back(VertexSet(b.owners.size(), {gy}));
  info.names = b.names;
  return Instance{b.build(), std::move(spec), std::move(info)};
}

Instance gen_ov_safety(const OvInstance& ov) {
  ov.validate();
  const std::size_t d = ov.d;
  const bool pad = std::any_of(ov.s1.begin(), ov.s1.end(),
                               [](const auto& x) { return std::none_of(x.begin(), x.end(), [](auto b) { return b; }); });
  const std::size_t coords = d + (pad ? 1 : 0);
  InstanceInfo info{"ov-safety", 0, 0, {}, {}};

  // S2' over `coords` coordinates.
  std::vector<std::vector<std::uint8_t>> s2;
  for (auto y : ov.s2) {
    if (pad) y.push_back(0);
    s2.push_back(std::move(y));
  }
  const std::vector<std::uint8_t> ones(d, 1);
  if (std::find(ov.s2.begin(), ov.s2.end(), ones) == ov.s2.end()) {
    auto y = ones;
    if (pad) y.push_back(0);
    s2.push_back(std::move(y));
    info.notes.push_back("all-ones vector inserted into S2");
  }
  if (pad) {
    std::vector<std::uint8_t> e(coords, 0);
    e[d] = 1;
    s2.push_back(std::move(e));
    info.notes.push_back("padding coordinate and gadget vector e_pad added: S1 has an all-zero vector");
  }

  Builder b;
  b.add(Owner::Player1, "s");
  std::vector<Vertex> xs, cs, ys;
  for (const auto& x : ov.s1) xs.push_back(b.add(Owner::Random, "x:" + bits(x)));
  for (std::size_t i = 0; i < coords; ++i) cs.push_back(b.add(Owner::Random, i < d ? "c" + std::to_string(i) : "c_pad"));
  for (const auto& y : s2) ys.push_back(b.add(Owner::Player1, "y:" + bits(y)));
  b.adj[0] = xs;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i)
      if (ov.s1[j][i]) b.adj[xs[j]].push_back(cs[i]);
    if (pad) b.adj[xs[j]].push_back(cs[d]);
  }
  for (std::size_t i = 0; i < coords; ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (s2[j][i]) b.adj[cs[i]].push_back(ys[j]);
  for (Vertex y : ys) b.adj[y] = {0};
  ObjectiveSpec spec{ObjectiveKind::Safety, CombinationMode::DisjQuery, {}, {}};
  for (Vertex y : ys) spec.sets.push_back(VertexSet(b.owners.size(), {y}));
  info.names = b.names;
  return Instance{b.build(), std::move(spec), std::move(info)};
}

SourceGraph random_source_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  SourceGraph g;
  g.n = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.chance(p)) g.edges.emplace_back(u, v);
  return g;
}

OvInstance random_ov(std::size_t count, std::size_t d, std::uint64_t seed, double density) {
  Rng rng(seed);
  OvInstance ov;
  ov.d = d;
  for (auto* set : {&ov.s1, &ov.s2})
    for (std::size_t j = 0; j < count; ++j) {
      std::vector<std::uint8_t> x(d);
      for (auto& bit : x) bit = rng.chance(density) ? 1 : 0;
      set->push_back(std::move(x));
    }
  return ov;
}

namespace {

/** Adds distinct uniform edges until the total reaches m. */
void fill_edges(Rng& rng, std::vector<std::vector<Vertex>>& adj, std::unordered_set<std::uint64_t>& present,
                std::size_t m) {
  const std::size_t n = adj.size();
  std::size_t total = present.size();
  m = std::min(m, n * n);
  while (total < m) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (!present.insert(static_cast<std::uint64_t>(u) * n + v).second) continue;
    adj[u].push_back(v);
    ++total;
  }
}

}  // namespace

Mdp random_mdp(std::size_t n, std::size_t m, std::uint64_t seed, RandomMdpOptions opts) {
  Rng rng(seed);
  std::vector<Owner> owners(n);
  for (auto& o : owners) o = rng.chance(opts.random_share) ? Owner::Random : Owner::Player1;
  std::vector<std::vector<Vertex>> adj(n);
  std::unordered_set<std::uint64_t> present;
  for (Vertex u = 0; u < n; ++u) {
    Vertex v;
    if (opts.block == 0) {
      v = static_cast<Vertex>(rng.below(n));
    } else {
      const std::size_t lo = u / opts.block * opts.block;
      v = static_cast<Vertex>(lo + rng.below(std::min(n, lo + opts.block) - lo));
    }
    adj[u].push_back(v);
    present.insert(static_cast<std::uint64_t>(u) * n + v);
  }
  if (opts.block == 0) {
    fill_edges(rng, adj, present, m);
    return Mdp(std::move(owners), std::move(adj));
  }
  m = std::min(m, n * n);
  for (std::size_t attempts = 0; present.size() < m && attempts < 64 * m; ++attempts) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const std::size_t lo = u / opts.block * opts.block;
    const std::size_t hi = std::min(n, lo + opts.block);
    Vertex v;
    if (rng.chance(opts.cross)) {
      if (hi == n) continue;
      v = static_cast<Vertex>(hi + rng.below(n - hi));
    } else {
      v = static_cast<Vertex>(lo + rng.below(hi - lo));
    }
    if (present.insert(static_cast<std::uint64_t>(u) * n + v).second) adj[u].push_back(v);
  }
  return Mdp(std::move(owners), std::move(adj));
}

Mdp random_strongly_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  std::vector<std::vector<Vertex>> adj(n);
  std::unordered_set<std::uint64_t> present;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex u = order[i], v = order[(i + 1) % n];
    adj[u].push_back(v);
    present.insert(static_cast<std::uint64_t>(u) * n + v);
  }
  fill_edges(rng, adj, present, m);
  return Mdp(std::vector<Owner>(n, Owner::Player1), std::move(adj));
}

SourceGraph figure_triangle_graph() { return SourceGraph{3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}, {"a", "b", "c"}}; }

SourceGraph figure_safety_graph() {
  return SourceGraph{4, {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 3}, {3, 0}}, {"a", "b", "c", "d"}};
}

OvInstance figure_ov_reach() { return OvInstance{3, {{1, 0, 0}, {1, 1, 1}, {0, 1, 1}}, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}; }

OvInstance figure_ov_safety() {
  return OvInstance{3, {{1, 0, 0}, {1, 1, 1}, {0, 1, 1}}, {{1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 0, 1}}};
}

}  // namespace qmdp
