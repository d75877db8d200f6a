#pragma once

#include <span>
#include <vector>

#include "qmdp/view.hpp"

namespace qmdp {

/**
 * Random attractor Attr(P, W): least superset of W ∩ V closed under adding
 * random vertices with an edge into it and player-1 vertices whose every
 * in-view edge leads into it. A player-1 vertex without in-view successors
 * satisfies the second rule vacuously and is included.
 */
VertexSet random_attractor(const MdpView& view, const VertexSet& w);

/**
 * Extended attractor Attr+(P, W, T): starts from W \ T, player-1 vertices may
 * also have a self-loop, vertices of T are never added.
 */
VertexSet extended_attractor(const MdpView& view, const VertexSet& w, const VertexSet& t);

/**
 * Worklist form of random_attractor, in discovery order. Cost is linear in
 * the in-view in-degrees of the attracted vertices. Player-1 sinks are not
 * seeded: callers use it where every player-1 vertex has an in-view successor.
 */
std::vector<Vertex> attract(const MdpView& view, std::span<const Vertex> seeds);

}  // namespace qmdp
