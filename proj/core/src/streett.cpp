#include "qmdp/streett.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <string>

#include "qmdp/attractor.hpp"
#include "qmdp/error.hpp"
#include "qmdp/graphalg.hpp"
#include "qmdp/mec.hpp"
#include "qmdp/reach.hpp"
#include "scratch.hpp"

namespace qmdp {

StreettIndex::StreettIndex(std::size_t n, std::span<const Pair> pairs)
    : k_(pairs.size()), offsets_(n + 1, 0), tags_(n, kNone), bad_flag_(n, 0) {
  for (const auto& p : pairs) {
    if (p.l.universe() != n || p.u.universe() != n) throw ModelError("pair universe does not match the mdp");
    for (Vertex v : p.l | p.u) ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  entries_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (Vertex v : pairs[i].l | pairs[i].u)
      entries_[fill[v]++] = {static_cast<std::uint32_t>(i), pairs[i].l.contains(v), pairs[i].u.contains(v)};
}

StreettState::StreettState(StreettIndex& index, std::vector<Vertex> x) : index_(&index), tag_(index.next_tag_++) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  members_ = std::move(x);
  size_ = members_.size();
  for (Vertex v : members_) {
    index_->tags_[v] = tag_;
    index_->bad_flag_[v] = 0;
    for (const auto& m : index_->memberships(v)) {
      Counter& c = counters_[m.pair];
      if (m.in_l) {
        ++c.l;
        c.l_members.push_back(v);
      }
      if (m.in_u) ++c.u;
    }
  }
  for (auto& [pair, c] : counters_)
    if (c.u == 0 && c.l > 0) mark_dead(c);
}

void StreettState::mark_dead(Counter& c) {
  for (Vertex v : c.l_members)
    if (contains(v) && !index_->bad_flag_[v]) {
      index_->bad_flag_[v] = 1;
      bad_.push_back(v);
    }
  c.l_members.clear();
}

void StreettState::remove(std::span<const Vertex> b) {
  detail::Lease seen(index_->tags_.size());
  for (Vertex v : b) {
    if (v >= index_->tags_.size() || !contains(v))
      throw PreconditionError("remove: vertex " + std::to_string(v) + " is not in the set");
    if (seen->touched(v)) throw PreconditionError("remove: vertex " + std::to_string(v) + " listed twice");
    seen->set(v, 1);
  }
  for (Vertex v : b) {
    index_->tags_[v] = kNone;
    index_->bad_flag_[v] = 0;
    --size_;
    for (const auto& m : index_->memberships(v)) {
      Counter& c = counters_[m.pair];
      if (m.in_l) --c.l;
      if (m.in_u && --c.u == 0 && c.l > 0) mark_dead(c);
    }
  }
}

std::vector<Vertex> StreettState::bad() {
  std::erase_if(bad_, [&](Vertex v) { return !contains(v); });
  std::sort(bad_.begin(), bad_.end());
  return bad_;
}

const std::vector<Vertex>& StreettState::members() {
  if (members_.size() != size_) std::erase_if(members_, [&](Vertex v) { return !contains(v); });
  return members_;
}

std::size_t StreettState::l_count(std::uint32_t pair) const {
  auto it = counters_.find(pair);
  return it == counters_.end() ? 0 : it->second.l;
}

std::size_t StreettState::u_count(std::uint32_t pair) const {
  auto it = counters_.find(pair);
  return it == counters_.end() ? 0 : it->second.u;
}

MdpView StreettState::view(const Mdp& mdp) { return MdpView(mdp, index_->tags(), tag_, members()); }

std::string_view to_string(StreettAlgo algo) {
  switch (algo) {
    case StreettAlgo::Basic: return "basic";
    case StreettAlgo::Impr: return "impr";
    case StreettAlgo::Dense: return "dense";
    case StreettAlgo::Sparse: return "sparse";
    case StreettAlgo::Auto: return "auto";
  }
  return "?";
}

std::optional<StreettAlgo> parse_streett_algo(std::string_view s) {
  for (auto a : {StreettAlgo::Basic, StreettAlgo::Impr, StreettAlgo::Dense, StreettAlgo::Sparse, StreettAlgo::Auto})
    if (to_string(a) == s) return a;
  return std::nullopt;
}

namespace {

std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

}  // namespace

StreettAlgo streett_auto_choice(std::size_t n, std::size_t m) {
  // n^2 <= m sqrt(m log n)  <=>  n^4 <= m^3 log n
  using u128 = unsigned __int128;
  const u128 nn = static_cast<u128>(n) * n;
  const u128 lhs = nn * nn;
  const u128 rhs = static_cast<u128>(m) * m * m * std::max<std::size_t>(1, ceil_log2(n));
  return lhs <= rhs ? StreettAlgo::Dense : StreettAlgo::Sparse;
}

namespace {

/** Removes Attr(P[S], Bad) until no bad vertex is left. Returns everything removed. */
std::vector<Vertex> drain_bad(const Mdp& mdp, StreettState& s) {
  std::vector<Vertex> removed;
  for (auto b = s.bad(); !b.empty(); b = s.bad()) {
    const auto a = attract(s.view(mdp), b);
    s.remove(a);
    removed.insert(removed.end(), a.begin(), a.end());
  }
  return removed;
}

/** Random vertices of `c` with an edge to a vertex of state tag `outside`. */
std::vector<Vertex> random_exits(const Mdp& mdp, std::span<const Vertex> c, std::span<const std::uint32_t> tags,
                                 std::uint32_t outside) {
  std::vector<Vertex> r;
  for (Vertex v : c) {
    if (!mdp.is_random(v)) continue;
    for (Vertex w : mdp.successors(v))
      if (tags[w] == outside) {
        r.push_back(v);
        break;
      }
  }
  return r;
}

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b, std::size_t n) {
  detail::Lease mark(n);
  for (Vertex v : b) mark->set(v, 1);
  std::vector<Vertex> out;
  for (Vertex v : a)
    if (!mark->touched(v)) out.push_back(v);
  return out;
}

#ifdef QMDP_CHECK_INVARIANTS
void check_random_closed(const Mdp& mdp, StreettState& s) {
  for (Vertex v : s.members())
    if (mdp.is_random(v))
      for (Vertex w : mdp.successors(v))
        if (!s.contains(w)) throw InvariantError("random edge leaves a queued set");
}

void check_good(const Mdp& mdp, std::span<const Pair> pairs, const VertexSet& x) {
  if (!is_end_component(MdpView(mdp, x), x)) throw InvariantError("accepted set is not an end component");
  for (const auto& p : pairs)
    if (x.intersects(p.l) && !x.intersects(p.u)) throw InvariantError("accepted set has bad vertices");
}
#endif

struct Solver {
  const Mdp& mdp;
  std::span<const Pair> pairs;
  StreettIndex index;
  std::vector<std::unique_ptr<StreettState>> queue;
  VertexSet good;

  Solver(const Mdp& m, std::span<const Pair> ps)
      : mdp(m), pairs(ps), index(m.num_vertices(), ps), good(m.num_vertices()) {
    for (const auto& x : mecs_of(mdp).mecs) queue.push_back(std::make_unique<StreettState>(index, x));
  }

  void push(std::unique_ptr<StreettState> s) {
    if (s->empty()) return;
#ifdef QMDP_CHECK_INVARIANTS
    check_random_closed(mdp, *s);
#endif
    queue.push_back(std::move(s));
  }
  std::unique_ptr<StreettState> pop() {
    auto s = std::move(queue.back());
    queue.pop_back();
    return s;
  }
  void accept(StreettState& s) {
#ifdef QMDP_CHECK_INVARIANTS
    if (!s.bad().empty()) throw InvariantError("accepted set has bad vertices");
    check_good(mdp, pairs, VertexSet(mdp.num_vertices(), s.members()));
#endif
    for (Vertex v : s.members()) good.insert(v);
  }
};

VertexSet good_basic(const Mdp& mdp, std::span<const Pair> pairs) {
  const std::size_t n = mdp.num_vertices();
  VertexSet good(n);
  std::vector<std::vector<Vertex>> work = mecs_of(mdp).mecs;
  while (!work.empty()) {
    std::vector<Vertex> x = std::move(work.back());
    work.pop_back();
    const VertexSet xs(n, x);
    VertexSet bad(n);
    for (const auto& p : pairs)
      if (!xs.intersects(p.u)) bad |= (xs & p.l);
    if (bad.empty()) {
#ifdef QMDP_CHECK_INVARIANTS
      check_good(mdp, pairs, xs);
#endif
      good |= xs;
      continue;
    }
    const auto bv = bad.to_vector();
    VertexSet rest = xs;
    for (Vertex a : attract(MdpView(mdp, xs), bv)) rest.erase(a);
    if (rest.empty()) continue;
    for (auto& y : mec_decomposition(MdpView(mdp, rest)).mecs) work.push_back(std::move(y));
  }
  return good;
}

VertexSet good_impr(const Mdp& mdp, std::span<const Pair> pairs) {
  Solver sv(mdp, pairs);
  auto tags = sv.index.tags();
  while (!sv.queue.empty()) {
    auto s = sv.pop();
    drain_bad(mdp, *s);
    if (s->empty()) continue;
    const MdpView ps = s->view(mdp);
    if (!ps.has_any_edge()) continue;
    const SccPartition part = sccs(ps);
    if (part.size() == 1) {
      sv.accept(*s);
      continue;
    }
    const std::size_t largest = part.largest();
    std::vector<std::vector<Vertex>> attracted(part.size());
    for (std::size_t c = 0; c < part.size(); ++c) {
      const auto& comp = part.components[c];
      std::vector<Vertex> r;
      for (Vertex v : comp) {
        if (!mdp.is_random(v)) continue;
        for (Vertex w : mdp.successors(v))
          if (tags[w] == s->tag() && part.component_of[w] != c) {
            r.push_back(v);
            break;
          }
      }
      attracted[c] = attract(MdpView(mdp, part.component_of, static_cast<std::uint32_t>(c), comp), r);
    }
    for (std::size_t c = 0; c < part.size(); ++c) {
      if (c == largest) {
        s->remove(attracted[c]);
        continue;
      }
      const auto& comp = part.components[c];
      s->remove(comp);
      sv.push(std::make_unique<StreettState>(sv.index, minus(comp, attracted[c], mdp.num_vertices())));
    }
    sv.push(std::move(s));
  }
  return sv.good;
}

VertexSet good_dense(const Mdp& mdp, std::span<const Pair> pairs) {
  Solver sv(mdp, pairs);
  auto tags = sv.index.tags();
  while (!sv.queue.empty()) {
    auto s = sv.pop();
    drain_bad(mdp, *s);
    if (s->empty()) continue;
    const MdpView ps = s->view(mdp);
    if (!ps.has_any_edge()) continue;
    FoundScc f = smallest_bscc_hierarchical(ps);
    if (f.whole) {
      sv.accept(*s);
      continue;
    }
    if (f.side == SccSide::Top) {
      s->remove(f.vertices);
      auto c = std::make_unique<StreettState>(sv.index, std::move(f.vertices));
      const auto r = random_exits(mdp, c->members(), tags, s->tag());
      c->remove(attract(c->view(mdp), r));
      sv.push(std::move(s));
      sv.push(std::move(c));
    } else {
      s->remove(attract(ps, f.vertices));
      sv.push(std::move(s));
      sv.push(std::make_unique<StreettState>(sv.index, std::move(f.vertices)));
    }
  }
  return sv.good;
}

/** h: lost an incoming edge, t: lost an outgoing edge. */
constexpr std::uint8_t kHead = 1;
constexpr std::uint8_t kTail = 2;

struct Labels {
  std::vector<std::uint8_t> bits;
  std::vector<std::vector<Vertex>> lists;  // by state tag

  std::vector<Vertex>& list(std::uint32_t tag) {
    if (lists.size() <= tag) lists.resize(tag + 1);
    return lists[tag];
  }
  void add(Vertex v, std::uint8_t b, std::uint32_t tag) {
    if (bits[v] == 0) list(tag).push_back(v);
    bits[v] |= b;
  }
  /** Labels vertices of state `tag` adjacent to the removed set. */
  void after_removal(const Mdp& mdp, std::span<const Vertex> removed, std::span<const std::uint32_t> tags,
                     std::uint32_t tag) {
    for (Vertex a : removed) {
      for (Vertex w : mdp.successors(a))
        if (tags[w] == tag) add(w, kHead, tag);
      for (Vertex u : mdp.predecessors(a))
        if (tags[u] == tag) add(u, kTail, tag);
    }
  }
  void clear(std::span<const Vertex> vs) {
    for (Vertex v : vs) bits[v] = 0;
  }
  /** Live labelled vertices of the state, deduplicated. */
  std::vector<Vertex>& compact(std::span<const std::uint32_t> tags, std::uint32_t tag) {
    auto& l = list(tag);
    std::erase_if(l, [&](Vertex v) { return tags[v] != tag || bits[v] == 0; });
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    return l;
  }
};

#ifdef QMDP_CHECK_INVARIANTS
void check_labels(const Mdp& mdp, StreettState& s, const Labels& labels) {
  const MdpView ps = s.view(mdp);
  const SccPartition part = sccs(ps);
  if (part.size() <= 1) return;
  for (std::size_t c = 0; c < part.size(); ++c) {
    bool head = false, tail = false;
    for (Vertex v : part.components[c]) {
      head = head || (labels.bits[v] & kHead);
      tail = tail || (labels.bits[v] & kTail);
    }
    if (part.top[c] && !head) throw InvariantError("top SCC without an h label");
    if (part.bottom[c] && !tail) throw InvariantError("bottom SCC without a t label");
  }
}
#endif

VertexSet good_sparse(const Mdp& mdp, std::span<const Pair> pairs) {
  Solver sv(mdp, pairs);
  auto tags = sv.index.tags();
  Labels labels{std::vector<std::uint8_t>(mdp.num_vertices(), 0), {}};
  const std::size_t m = mdp.num_edges();
  const std::size_t log_n = std::max<std::size_t>(1, ceil_log2(mdp.num_vertices()));
  auto push = [&](std::unique_ptr<StreettState> s) {
#ifdef QMDP_CHECK_INVARIANTS
    if (!s->empty()) check_labels(mdp, *s, labels);
#endif
    sv.push(std::move(s));
  };

  while (!sv.queue.empty()) {
    auto s = sv.pop();
    const auto removed = drain_bad(mdp, *s);
    labels.after_removal(mdp, removed, tags, s->tag());
    if (s->empty()) continue;
    const MdpView ps = s->view(mdp);
    if (!ps.has_any_edge()) continue;

    const auto& marked = labels.compact(tags, s->tag());
    std::vector<Vertex> heads, tails;
    for (Vertex v : marked) {
      if (labels.bits[v] & kHead) heads.push_back(v);
      if (labels.bits[v] & kTail) tails.push_back(v);
    }
    const std::size_t h = heads.size() + tails.size();
    if (h == 0) {
      sv.accept(*s);
      continue;
    }

    if (h * h * log_n >= m) {
      labels.clear(marked);
      labels.list(s->tag()).clear();
      const SccPartition part = sccs(ps);
      const std::size_t largest = part.largest();
      std::vector<std::vector<Vertex>> attracted(part.size());
      for (std::size_t c = 0; c < part.size(); ++c) {
        const auto& comp = part.components[c];
        std::vector<Vertex> r;
        for (Vertex v : comp) {
          if (!mdp.is_random(v)) continue;
          for (Vertex w : mdp.successors(v))
            if (tags[w] == s->tag() && part.component_of[w] != c) {
              r.push_back(v);
              break;
            }
        }
        attracted[c] = attract(MdpView(mdp, part.component_of, static_cast<std::uint32_t>(c), comp), r);
      }
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (c == largest) continue;
        const auto& comp = part.components[c];
        s->remove(comp);
        auto next = std::make_unique<StreettState>(sv.index, minus(comp, attracted[c], mdp.num_vertices()));
        labels.after_removal(mdp, attracted[c], tags, next->tag());
        push(std::move(next));
      }
      s->remove(attracted[largest]);
      labels.after_removal(mdp, attracted[largest], tags, s->tag());
      push(std::move(s));
      continue;
    }

    FoundScc f = lockstep_bottom_scc(ps, tails, heads);
    if (f.whole) {
      sv.accept(*s);
      continue;
    }
    labels.clear(f.vertices);
    if (f.side == SccSide::Top) {
      s->remove(f.vertices);
      labels.after_removal(mdp, f.vertices, tags, s->tag());
      auto c = std::make_unique<StreettState>(sv.index, std::move(f.vertices));
      const auto r = random_exits(mdp, c->members(), tags, s->tag());
      const auto a = attract(c->view(mdp), r);
      c->remove(a);
      labels.after_removal(mdp, a, tags, c->tag());
      push(std::move(s));
      push(std::move(c));
    } else {
      const auto a = attract(ps, f.vertices);
      s->remove(a);
      labels.after_removal(mdp, a, tags, s->tag());
      push(std::move(s));
      push(std::make_unique<StreettState>(sv.index, std::move(f.vertices)));
    }
  }
  return sv.good;
}

}  // namespace

VertexSet streett_good_union(const Mdp& mdp, std::span<const Pair> pairs, StreettAlgo algo) {
  if (algo == StreettAlgo::Auto) algo = streett_auto_choice(mdp.num_vertices(), mdp.num_edges());
  switch (algo) {
    case StreettAlgo::Basic: return good_basic(mdp, pairs);
    case StreettAlgo::Impr: return good_impr(mdp, pairs);
    case StreettAlgo::Dense: return good_dense(mdp, pairs);
    case StreettAlgo::Sparse: return good_sparse(mdp, pairs);
    case StreettAlgo::Auto: break;
  }
  throw InvariantError("unreachable streett algorithm");
}

VertexSet as_streett(const Mdp& mdp, std::span<const Pair> pairs, StreettAlgo algo) {
  return as_reach_single(mdp, streett_good_union(mdp, pairs, algo));
}

}  // namespace qmdp
