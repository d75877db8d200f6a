#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qmdp/view.hpp"

namespace qmdp {

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct SccPartition {
  /** Components in completion order (every edge leaving a component points to an earlier one). */
  std::vector<std::vector<Vertex>> components;
  /** Component index per global vertex, kNone outside the view. */
  std::vector<std::uint32_t> component_of;
  std::vector<char> bottom;   // no edge to another component
  std::vector<char> top;      // no edge from another component
  std::vector<char> trivial;  // one vertex, no self-loop

  std::size_t size() const noexcept { return components.size(); }
  /** Index of the largest component, ties to the lowest minimum vertex. */
  std::size_t largest() const;
};

/** Tarjan's algorithm over the view. Components are sorted ascending. */
SccPartition sccs(const MdpView& view);
bool is_strongly_connected(const MdpView& view);

/** In-view vertices that reach some in-view target. */
std::vector<Vertex> graph_reach_list(const MdpView& view, std::span<const Vertex> targets);
VertexSet graph_reach(const MdpView& view, const VertexSet& targets);

/** H_j: every vertex keeps its first 2^j in-view out-edges. */
struct LevelGraph {
  std::size_t level;
  MdpView view;
  /** Vertices with in-view out-degree above 2^j, ascending. */
  std::vector<Vertex> blue;
};
LevelGraph level_graph(const MdpView& view, std::size_t j);

enum class SccSide { Bottom, Top };

struct FoundScc {
  std::vector<Vertex> vertices;  // ascending
  SccSide side = SccSide::Bottom;
  /** The view itself is strongly connected and `vertices` is all of it. */
  bool whole = false;
};

/**
 * Either the whole view (strongly connected) or a bottom SCC (side Bottom)
 * or top SCC (side Top) with at most half the view's vertices, found by
 * searching level graphs of increasing density. Precondition: non-empty.
 */
FoundScc smallest_bscc_hierarchical(const MdpView& view);

/**
 * Interleaved Tarjan searches, forward from each tail in the view and
 * backward from each head in the reversed view, one edge step per search per
 * round. Returns the first SCC any search completes: a bottom SCC for a
 * forward search, a top SCC for a backward one. Same-round ties go to the
 * lowest start vertex, forward before backward. With no tails and no heads
 * the view must be strongly connected, else PreconditionError.
 */
FoundScc lockstep_bottom_scc(const MdpView& view, std::span<const Vertex> tails, std::span<const Vertex> heads);

}  // namespace qmdp
