#include "qmdp/graphalg.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "qmdp/error.hpp"
#include "scratch.hpp"

namespace qmdp {

std::size_t SccPartition::largest() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < components.size(); ++i) {
    const auto& a = components[i];
    const auto& b = components[best];
    if (a.size() > b.size() || (a.size() == b.size() && a.front() < b.front())) best = i;
  }
  return best;
}

SccPartition sccs(const MdpView& view) {
  const std::size_t n = view.universe();
  SccPartition p;
  p.component_of.assign(n, kNone);
  std::vector<std::uint32_t> index(n, kNone), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  struct Frame {
    Vertex v;
    MdpView::Cursor cursor;
  };
  std::vector<Frame> dfs;
  std::uint32_t counter = 0;
  auto open = [&](Vertex v) {
    index[v] = low[v] = counter++;
    on_stack[v] = 1;
    stack.push_back(v);
    dfs.push_back({v, {}});
  };
  for (Vertex root : view.vertices()) {
    if (index[root] != kNone) continue;
    open(root);
    while (!dfs.empty()) {
      const Vertex v = dfs.back().v;
      Vertex w;
      if (view.next_successor(v, dfs.back().cursor, w)) {
        if (index[w] == kNone)
          open(w);
        else if (on_stack[w])
          low[v] = std::min(low[v], index[w]);
        continue;
      }
      dfs.pop_back();
      if (!dfs.empty()) low[dfs.back().v] = std::min(low[dfs.back().v], low[v]);
      if (low[v] != index[v]) continue;
      const auto id = static_cast<std::uint32_t>(p.components.size());
      std::vector<Vertex> comp;
      Vertex x;
      do {
        x = stack.back();
        stack.pop_back();
        on_stack[x] = 0;
        p.component_of[x] = id;
        comp.push_back(x);
      } while (x != v);
      std::sort(comp.begin(), comp.end());
      p.components.push_back(std::move(comp));
    }
  }
  const std::size_t k = p.components.size();
  p.bottom.assign(k, 1);
  p.top.assign(k, 1);
  p.trivial.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& comp = p.components[c];
    if (comp.size() == 1 && !view.has_edge(comp[0], comp[0])) p.trivial[c] = 1;
    for (Vertex v : comp)
      view.for_each_successor(v, [&](Vertex w) {
        const auto d = p.component_of[w];
        if (d != c) {
          p.bottom[c] = 0;
          p.top[d] = 0;
        }
      });
  }
  return p;
}

bool is_strongly_connected(const MdpView& view) { return view.size() > 0 && sccs(view).size() == 1; }

std::vector<Vertex> graph_reach_list(const MdpView& view, std::span<const Vertex> targets) {
  detail::Lease seen(view.universe());
  std::vector<Vertex> out;
  for (Vertex t : targets)
    if (view.contains(t) && !seen->touched(t)) {
      seen->set(t, 1);
      out.push_back(t);
    }
  if (view.cap() == MdpView::no_cap) {
    for (std::size_t head = 0; head < out.size(); ++head)
      view.for_each_predecessor(out[head], [&](Vertex u) {
        if (!seen->touched(u)) {
          seen->set(u, 1);
          out.push_back(u);
        }
      });
    return out;
  }
  // Capped: materialise the kept reverse edges once instead of re-deriving them per lookup.
  detail::Lease local(view.universe());
  const auto& vs = view.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) local->set(vs[i], static_cast<std::uint32_t>(i));
  std::vector<std::vector<Vertex>> rev(vs.size());
  for (Vertex u : vs) view.for_each_successor(u, [&](Vertex w) { rev[local->get(w)].push_back(u); });
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Vertex u : rev[local->get(out[head])])
      if (!seen->touched(u)) {
        seen->set(u, 1);
        out.push_back(u);
      }
  return out;
}

VertexSet graph_reach(const MdpView& view, const VertexSet& targets) {
  const auto ts = targets.to_vector();
  return VertexSet(view.universe(), graph_reach_list(view, ts));
}

LevelGraph level_graph(const MdpView& view, std::size_t j) {
  const std::size_t cap = j >= 63 ? MdpView::no_cap : (std::size_t{1} << j);
  LevelGraph g{j, view.capped(cap), {}};
  for (Vertex v : view.vertices())
    if (view.out_degree_uncapped(v) > cap) g.blue.push_back(v);
  std::sort(g.blue.begin(), g.blue.end());
  return g;
}

namespace {

FoundScc whole_view(const MdpView& view) {
  FoundScc f;
  f.vertices = view.vertices();
  std::sort(f.vertices.begin(), f.vertices.end());
  f.whole = true;
  return f;
}

}  // namespace

FoundScc smallest_bscc_hierarchical(const MdpView& view) {
  const std::size_t s = view.size();
  if (s == 0) throw PreconditionError("smallest_bscc_hierarchical on an empty view");
  if (s == 1) return whole_view(view);
  const Mdp& mdp = view.mdp();
  for (std::size_t j = 1;; ++j) {
    const std::size_t cap = j >= 63 ? MdpView::no_cap : (std::size_t{1} << j);
    for (SccSide side : {SccSide::Bottom, SccSide::Top}) {
      const MdpView h = side == SccSide::Bottom ? view : view.reversed();
      const LevelGraph lg = level_graph(h, j);
      VertexSet z = view.vertex_set();
      for (Vertex v : graph_reach_list(lg.view, lg.blue)) z.erase(v);
      if (z.empty()) continue;
      MdpView zview(mdp, z);
      if (side == SccSide::Top) zview = zview.reversed();
      const SccPartition part = sccs(zview.capped(cap));
      std::size_t best = kNone;
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (!part.bottom[c]) continue;
        if (best == kNone || part.components[c].size() < part.components[best].size() ||
            (part.components[c].size() == part.components[best].size() &&
             part.components[c].front() < part.components[best].front()))
          best = c;
      }
      const auto& c = part.components[best];
      if (c.size() == s) return whole_view(view);
      if (2 * c.size() <= s) return FoundScc{c, side, false};
    }
    if (cap >= s) break;
  }
  throw InvariantError("hierarchical search found no small top or bottom SCC");
}

namespace {

/** One Tarjan search that can be advanced an edge at a time. */
class SteppedTarjan {
 public:
  SteppedTarjan(const MdpView& view, Vertex start) : view_(view) { open(start); }

  /** One step. Returns true once the first SCC has been completed. */
  bool step() {
    const Vertex v = dfs_.back().v;
    Vertex w;
    if (view_.next_successor(v, dfs_.back().cursor, w)) {
      auto it = nodes_.find(w);
      if (it == nodes_.end())
        open(w);
      else if (it->second.on_stack)
        nodes_[v].low = std::min(nodes_[v].low, it->second.index);
      return false;
    }
    dfs_.pop_back();
    Node& nv = nodes_[v];
    if (!dfs_.empty()) {
      Node& parent = nodes_[dfs_.back().v];
      parent.low = std::min(parent.low, nv.low);
    }
    if (nv.low != nv.index) return false;
    Vertex x;
    do {
      x = stack_.back();
      stack_.pop_back();
      component_.push_back(x);
    } while (x != v);
    std::sort(component_.begin(), component_.end());
    return true;
  }
  std::vector<Vertex>& component() { return component_; }

 private:
  struct Node {
    std::uint32_t index;
    std::uint32_t low;
    bool on_stack;
  };
  struct Frame {
    Vertex v;
    MdpView::Cursor cursor;
  };
  void open(Vertex v) {
    nodes_[v] = Node{counter_, counter_, true};
    ++counter_;
    stack_.push_back(v);
    dfs_.push_back({v, {}});
  }

  MdpView view_;
  std::unordered_map<Vertex, Node> nodes_;
  std::vector<Frame> dfs_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> component_;
  std::uint32_t counter_ = 0;
};

}  // namespace

FoundScc lockstep_bottom_scc(const MdpView& view, std::span<const Vertex> tails, std::span<const Vertex> heads) {
  struct Start {
    Vertex v;
    SccSide side;
  };
  std::vector<Start> starts;
  for (Vertex t : tails)
    if (view.contains(t)) starts.push_back({t, SccSide::Bottom});
  for (Vertex h : heads)
    if (view.contains(h)) starts.push_back({h, SccSide::Top});
  std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) {
    return a.v != b.v ? a.v < b.v : (a.side == SccSide::Bottom && b.side == SccSide::Top);
  });
  starts.erase(std::unique(starts.begin(), starts.end(),
                           [](const Start& a, const Start& b) { return a.v == b.v && a.side == b.side; }),
               starts.end());
  if (starts.empty()) {
    if (is_strongly_connected(view)) return whole_view(view);
    throw PreconditionError("lockstep search without start vertices on a view that is not strongly connected");
  }
  const MdpView rev = view.reversed();
  std::vector<SteppedTarjan> searches;
  searches.reserve(starts.size());
  for (const auto& s : starts) searches.emplace_back(s.side == SccSide::Bottom ? view : rev, s.v);
  for (;;) {
    for (std::size_t i = 0; i < searches.size(); ++i) {
      if (!searches[i].step()) continue;
      FoundScc f;
      f.vertices = std::move(searches[i].component());
      f.side = starts[i].side;
      f.whole = f.vertices.size() == view.size();
      return f;
    }
  }
}

}  // namespace qmdp
