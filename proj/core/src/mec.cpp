#include "qmdp/mec.hpp"

#include <algorithm>

#include "qmdp/attractor.hpp"
#include "qmdp/graphalg.hpp"

namespace qmdp {

bool is_end_component(const MdpView& view, const VertexSet& x) {
  if (x.empty()) return false;
  for (Vertex v : x)
    if (!view.contains(v)) return false;
  for (Vertex v : x) {
    if (!view.is_random(v)) continue;
    bool closed = true;
    view.for_each_successor(v, [&](Vertex w) { closed = closed && x.contains(w); });
    if (!closed) return false;
  }
  const MdpView sub(view.mdp(), x);
  return sub.has_any_edge() && is_strongly_connected(sub);
}

MecDecomposition mec_decomposition(const MdpView& view) {
  const Mdp& mdp = view.mdp();
  const std::size_t n = view.universe();
  MecDecomposition out;
  out.mec_of.assign(n, kNone);
  std::vector<std::uint32_t> tags(n, kNone);
  for (Vertex v : view.vertices()) tags[v] = 0;
  std::uint32_t next_tag = 1;

  struct Item {
    std::uint32_t tag;
    std::vector<Vertex> members;
  };
  std::vector<Item> work;
  if (!view.empty()) work.push_back({0, view.vertices()});
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    const SccPartition part = sccs(MdpView(mdp, tags, item.tag, std::move(item.members)));
    std::vector<std::uint32_t> comp_tag(part.size());
    for (std::size_t c = 0; c < part.size(); ++c) {
      comp_tag[c] = next_tag++;
      for (Vertex v : part.components[c]) tags[v] = comp_tag[c];
    }
    for (std::size_t c = 0; c < part.size(); ++c) {
      const auto& comp = part.components[c];
      const std::uint32_t tag = comp_tag[c];
      std::vector<Vertex> leaving;
      for (Vertex v : comp) {
        if (!mdp.is_random(v)) continue;
        bool leaves = false;
        view.for_each_successor(v, [&](Vertex w) { leaves = leaves || tags[w] != tag; });
        if (leaves) leaving.push_back(v);
      }
      if (leaving.empty()) {
        if (part.trivial[c]) {
          tags[comp[0]] = kNone;
          out.residual.push_back(comp[0]);
        } else {
          out.mecs.push_back(comp);
        }
        continue;
      }
      const auto removed = attract(MdpView(mdp, tags, tag, comp), leaving);
      for (Vertex a : removed) {
        tags[a] = kNone;
        out.residual.push_back(a);
      }
      std::vector<Vertex> rest;
      for (Vertex v : comp)
        if (tags[v] == tag) rest.push_back(v);
      if (!rest.empty()) work.push_back({tag, std::move(rest)});
    }
  }
  std::sort(out.mecs.begin(), out.mecs.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < out.mecs.size(); ++i)
    for (Vertex v : out.mecs[i]) out.mec_of[v] = static_cast<std::uint32_t>(i);
  std::sort(out.residual.begin(), out.residual.end());
  return out;
}

const MecDecomposition& mecs_of(const Mdp& mdp) {
  return mdp.cache().get_or_compute<MecDecomposition>([&] { return mec_decomposition(MdpView(mdp)); });
}

VertexSet ContractedMdp::project(const VertexSet& original) const {
  VertexSet out(quotient.num_vertices());
  for (Vertex v : original) out.insert(image[v]);
  return out;
}

VertexSet ContractedMdp::lift(const VertexSet& quotient_set) const {
  VertexSet out(image.size());
  for (Vertex q : quotient_set)
    for (Vertex v : preimage[q]) out.insert(v);
  return out;
}

ContractedMdp contract_mecs(const Mdp& mdp, const MecDecomposition& mecs) {
  const std::size_t n = mdp.num_vertices();
  std::vector<Vertex> image(n, kNone);
  std::vector<std::vector<Vertex>> preimage;
  std::vector<Owner> owners;
  for (Vertex v = 0; v < n; ++v) {
    if (image[v] != kNone) continue;
    const auto q = static_cast<Vertex>(preimage.size());
    if (mecs.mec_of[v] != kNone) {
      preimage.push_back(mecs.mecs[mecs.mec_of[v]]);
      owners.push_back(Owner::Player1);
    } else {
      preimage.push_back({v});
      owners.push_back(mdp.owner(v));
    }
    for (Vertex u : preimage.back()) image[u] = q;
  }
  const std::size_t nq = preimage.size();
  std::vector<std::vector<Vertex>> adj(nq);
  std::vector<char> seen(nq, 0);
  for (std::size_t q = 0; q < nq; ++q) {
    auto& succ = adj[q];
    if (preimage[q].size() > 1 || mecs.mec_of[preimage[q][0]] != kNone) {
      succ.push_back(static_cast<Vertex>(q));
      seen[q] = 1;
    }
    for (Vertex v : preimage[q])
      for (Vertex w : mdp.successors(v))
        if (!seen[image[w]]) {
          seen[image[w]] = 1;
          succ.push_back(image[w]);
        }
    for (Vertex w : succ) seen[w] = 0;
    std::sort(succ.begin(), succ.end());
  }
  return ContractedMdp{Mdp(std::move(owners), std::move(adj)), std::move(image), std::move(preimage)};
}

const ContractedMdp& contraction_of(const Mdp& mdp) {
  const auto& mecs = mecs_of(mdp);
  return mdp.cache().get_or_compute<ContractedMdp>([&] { return contract_mecs(mdp, mecs); });
}

}  // namespace qmdp
