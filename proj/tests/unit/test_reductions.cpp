#include <doctest.h>

#include <cmath>

#include "qmdp/error.hpp"
#include "qmdp/oracle.hpp"
#include "qmdp/reach.hpp"
#include "qmdp/reductions.hpp"
#include "qmdp/safety.hpp"
#include "qmdp/solve.hpp"
#include "support/fixtures.hpp"

using namespace qmdp;
using namespace qmdp::testing;

namespace {

bool s_wins(const Instance& inst) { return solve(inst.mdp, inst.objective).winning.contains(inst.info.s); }

std::size_t sinks(const SourceGraph& g) {
  std::vector<char> has_out(g.n, 0);
  for (auto [u, v] : g.edges) has_out[u] = 1;
  return static_cast<std::size_t>(std::count(has_out.begin(), has_out.end(), 0));
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

std::size_t ones(const std::vector<std::uint8_t>& x) { return static_cast<std::size_t>(std::count(x.begin(), x.end(), 1)); }

bool has_zero_vector(const std::vector<std::vector<std::uint8_t>>& s) {
  return std::any_of(s.begin(), s.end(), [](const auto& x) { return ones(x) == 0; });
}

}  // namespace

TEST_CASE("source problem oracles") {
  CHECK(oracle_triangle(figure_triangle_graph()));
  CHECK(oracle_ov(figure_ov_reach()));
  CHECK_FALSE(oracle_triangle(SourceGraph{2, {{0, 1}, {1, 0}}, {}}));
  CHECK_FALSE(oracle_ov(OvInstance{2, {{1, 1}}, {{1, 1}}}));
}

TEST_CASE("triangle reach") {
  const Instance fig = gen_triangle_reach(figure_triangle_graph());
  CHECK(s_wins(fig));
  CHECK(fig.objective.kind == ObjectiveKind::Reach);
  CHECK(fig.objective.mode == CombinationMode::DisjQuery);
  CHECK(fig.info.names[0] == "s");
  CHECK(fig.info.names[1] == "a^1");
  CHECK_FALSE(s_wins(gen_triangle_reach(SourceGraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}})));
  CHECK_FALSE(s_wins(gen_triangle_reach(SourceGraph{3, {}, {}})));
  CHECK_THROWS_AS(gen_triangle_reach(SourceGraph{2, {{0, 0}}, {}}), ModelError);
}

TEST_CASE("OV reach") {
  const Instance fig = gen_ov_reach(figure_ov_reach());
  CHECK(s_wins(fig));
  // y = 010 alone: orthogonal partner 100 exists
  const Vertex g_y = fig.objective.sets[1].min();
  CHECK(fig.info.names[g_y] == "g:010");
  CHECK(as_reach_single(fig.mdp, fig.objective.sets[1]).contains(0));
  CHECK_FALSE(s_wins(gen_ov_reach(OvInstance{2, {{1, 1}}, {{1, 1}}})));
  CHECK(s_wins(gen_ov_reach(OvInstance{2, {{1, 1}, {1, 0}}, {{1, 1}, {0, 0}}})));
  // an all-zero x gets the padding coordinate and still wins
  const Instance padded = gen_ov_reach(OvInstance{2, {{0, 0}}, {{1, 1}}});
  CHECK(s_wins(padded));
  CHECK(padded.info.notes.size() >= 2);
}

TEST_CASE("triangle safety") {
  const Instance fig = gen_triangle_safety(figure_safety_graph());
  CHECK(fig.mdp.is_graph());
  const VertexSet w = solve(fig.mdp, fig.objective).winning;
  CHECK(w.contains(0));
  CHECK_FALSE(w.empty());
  SourceGraph cut = figure_safety_graph();
  cut.edges.erase(std::find(cut.edges.begin(), cut.edges.end(), std::pair<Vertex, Vertex>{2, 0}));
  CHECK_FALSE(oracle_triangle(cut));
  CHECK_FALSE(s_wins(gen_triangle_safety(cut)));
  CHECK(solve(gen_triangle_safety(SourceGraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}}).mdp,
              gen_triangle_safety(SourceGraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}}).objective)
            .winning.empty());
  const Instance single = gen_triangle_safety(SourceGraph{1, {}, {}});
  CHECK(solve(single.mdp, single.objective).winning.empty());
}

TEST_CASE("triangle safety tree") {
  const Instance fig = gen_triangle_safety_tree(figure_safety_graph());
  CHECK(s_wins(fig));
  for (const auto& t : fig.objective.sets) CHECK(t.size() == 4);
  // T_a = {b^1, x_2, b^4, y_2} in the figure's naming
  std::vector<std::string> ta;
  for (Vertex v : fig.objective.sets[0]) ta.push_back(fig.info.names[v]);
  std::sort(ta.begin(), ta.end());
  CHECK(ta == std::vector<std::string>{"b^1", "b^4", "x2", "y2"});
  CHECK_FALSE(s_wins(gen_triangle_safety_tree(SourceGraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}})));
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 1 + seed % 23;
    const SourceGraph g = random_source_graph(n, 0.2, seed);
    const Instance inst = gen_triangle_safety_tree(g);
    const std::size_t trap = sinks(g) > 0 ? 1 : 0;
    for (const auto& t : inst.objective.sets) CHECK(t.size() <= 2 * ceil_log2(n) + trap);
  }
}

TEST_CASE("OV safety") {
  const Instance fig = gen_ov_safety(figure_ov_safety());
  CHECK(fig.info.notes.empty());  // 111 already present
  const VertexSet q = solve(fig.mdp, fig.objective).winning;
  CHECK(q.contains(0));
  CHECK(oracle_safety_disj_objective(fig.mdp, fig.objective.sets).contains(0));
  CHECK_FALSE(q.empty());
  // objective formulation is rejected by the solver on MDPs
  ObjectiveSpec obj = fig.objective;
  obj.mode = CombinationMode::DisjObjective;
  CHECK_THROWS_AS(solve(fig.mdp, obj), UnsupportedError);

  const Instance none = gen_ov_safety(OvInstance{2, {{1, 1}, {1, 0}}, {{1, 1}, {1, 0}}});
  CHECK_FALSE(solve(none.mdp, none.objective).winning.contains(0));
  CHECK(solve(none.mdp, none.objective).winning.empty());
  CHECK(oracle_safety_disj_objective(none.mdp, none.objective.sets).empty());
  const Instance zero = gen_ov_safety(OvInstance{2, {{0, 0}, {1, 1}}, {{1, 1}}});
  CHECK(s_wins(zero));
}

TEST_CASE("closed-form sizes") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 2 + seed % 20;
    const SourceGraph g = random_source_graph(n, 0.2, seed);
    const std::size_t e = g.edges.size(), z = sinks(g), trap = z > 0 ? 1 : 0;
    CAPTURE(seed);
    const Instance r = gen_triangle_reach(g);
    CHECK(r.mdp.num_vertices() == 5 * n + 1);
    CHECK(r.mdp.num_edges() == 4 * n + 3 * e + 3 * z);
    const Instance s = gen_triangle_safety(g);
    CHECK(s.mdp.num_vertices() == 4 * n + 1 + trap);
    CHECK(s.mdp.num_edges() == 2 * n + 3 * e + trap * (3 * z + 1));
    const Instance t = gen_triangle_safety_tree(g);
    CHECK(t.mdp.num_vertices() == 6 * n - 3 + trap);
    CHECK(t.mdp.num_edges() == 4 * n - 4 + 3 * e + trap * (3 * z + 1));

    const std::size_t count = 1 + seed % 16;
    const std::size_t d = std::max<std::size_t>(1, ceil_log2(count));
    const OvInstance ov = random_ov(count, d, seed);
    const std::size_t pad = has_zero_vector(ov.s1) ? 1 : 0, coords = d + pad;
    std::size_t x_edges = 0, c_edges = 0, self_loops = 0;
    for (const auto& x : ov.s1) x_edges += ones(x) + pad;
    for (std::size_t i = 0; i < coords; ++i) {
      std::size_t out = 0;
      for (const auto& y : ov.s2) out += i == d || y[i] == 0;
      c_edges += out;
      self_loops += out == 0;
    }
    const Instance ovr = gen_ov_reach(ov);
    CHECK(ovr.mdp.num_vertices() == 1 + count + coords + 2 * count);
    CHECK(ovr.mdp.num_edges() == count + x_edges + c_edges + self_loops + 3 * count);

    const std::vector<std::uint8_t> all_ones(d, 1);
    const std::size_t add_ones = std::find(ov.s2.begin(), ov.s2.end(), all_ones) == ov.s2.end() ? 1 : 0;
    const std::size_t s2 = count + add_ones + pad;
    std::size_t y_ones = 0;
    for (const auto& y : ov.s2) y_ones += ones(y);
    y_ones += add_ones * d + pad;
    const Instance ovs = gen_ov_safety(ov);
    CHECK(ovs.mdp.num_vertices() == 1 + count + coords + s2);
    CHECK(ovs.mdp.num_edges() == count + x_edges + y_ones + s2);
    CHECK(ovs.objective.k() == s2);
  }
}

TEST_CASE("reductions are sound and complete on random sources") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const SourceGraph g = random_source_graph(3 + seed % 12, 0.2, seed);
    const bool tri = oracle_triangle(g);
    CAPTURE(seed);
    CHECK(s_wins(gen_triangle_reach(g)) == tri);
    const Instance s = gen_triangle_safety(g);
    const VertexSet ws = solve(s.mdp, s.objective).winning;
    CHECK(ws.contains(0) == tri);
    CHECK(ws.empty() == !tri);
    CHECK(s_wins(gen_triangle_safety_tree(g)) == tri);

    const std::size_t count = 1 + seed % 16;
    const OvInstance ov = random_ov(count, std::max<std::size_t>(1, ceil_log2(count)), seed);
    const bool orth = oracle_ov(ov);
    CHECK(s_wins(gen_ov_reach(ov)) == orth);
    const Instance os = gen_ov_safety(ov);
    const VertexSet wq = solve(os.mdp, os.objective).winning;
    CHECK(wq.contains(0) == orth);
    CHECK(wq.empty() == !orth);
    if (os.objective.k() <= 12) CHECK(oracle_safety_disj_objective(os.mdp, os.objective.sets).contains(0) == orth);
  }
}

TEST_CASE("random sources are deterministic") {
  const SourceGraph a = random_source_graph(20, 0.2, 42), b = random_source_graph(20, 0.2, 42);
  CHECK(a.edges == b.edges);
  CHECK(random_ov(8, 3, 7).s1 == random_ov(8, 3, 7).s1);
  CHECK(random_mdp(30, 90, 5) == random_mdp(30, 90, 5));
  Rng rng(0);
  CHECK(rng.next() == std::mt19937_64(0)());
}
