#include <doctest.h>

#include <set>

#include "qmdp/error.hpp"
#include "qmdp/io.hpp"
#include "qmdp/reductions.hpp"
#include "qmdp/view.hpp"
#include "support/fixtures.hpp"

using namespace qmdp;
using namespace qmdp::testing;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const MdpView& v) {
  auto e = v.edges();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s(130, {3, 64, 129});
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK(s.to_vector() == std::vector<Vertex>{3, 64, 129});
  CHECK(s.min() == 3);
  CHECK(s.complement().size() == 127);
  CHECK((s | VertexSet(130, {4})).size() == 4);
  CHECK((s & VertexSet(130, {64, 5})) == VertexSet(130, {64}));
  CHECK((s - VertexSet(130, {3})).to_vector() == std::vector<Vertex>{64, 129});
  CHECK_THROWS_AS(s.insert(130), std::out_of_range);
  CHECK(VertexSet::full(70).size() == 70);
}

TEST_CASE("parse F1") {
  const Mdp m = parse_mdp("mdp\nvertices 1\nrandom\nedge 0 0\n");
  CHECK(m == f1());
  CHECK(m.num_edges() == 1);
  CHECK(m.is_graph());
}

TEST_CASE("parse F2") {
  const Mdp m = parse_mdp("mdp\nvertices 2\nrandom 1\nedge 0 0\nedge 0 1\nedge 1 0\nedge 1 1\n");
  CHECK(m.num_edges() == 4);
  CHECK(m == f2());
  CHECK(m.owner(0) == Owner::Player1);
  CHECK(m.owner(1) == Owner::Random);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_mdp("mdp\nvertices 2\nrandom\nedge 0 5\nedge 1 1\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_mdp("mdp\nvertices 2\nedge 0 1\nedge 0 1\nedge 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_mdp("mdp\nvertices 2\nedge 0 1\n"), ParseError);  // 1 has no successor
  CHECK_THROWS_AS(parse_mdp("graph\n"), ParseError);
  CHECK_THROWS_AS(parse_mdp("mdp\nvertices x\n"), ParseError);
  CHECK_THROWS_AS(parse_mdp("mdp\nvertices 1\nloop 0\n"), ParseError);
}

TEST_CASE("--normalize gives sinks a self-loop") {
  const Mdp m = parse_mdp("mdp\nvertices 2\nedge 0 1\n", BuildOptions{true});
  CHECK(m.has_self_loop(1));
  CHECK(m.normalization().sink_self_loops == std::vector<Vertex>{1});
}

TEST_CASE("random vertex with only a self-loop becomes player 1") {
  const Mdp m = parse_mdp("mdp\nvertices 2\nrandom 0 1\nedge 0 1\nedge 1 1\n");
  CHECK(m.is_random(0));
  CHECK_FALSE(m.is_random(1));
  CHECK(m.normalization().random_self_loops == std::vector<Vertex>{1});
}

TEST_CASE("comments and blank lines") {
  const Mdp m = parse_mdp("# F1\nmdp\n\nvertices 1   # one vertex\nedge 0 0\n");
  CHECK(m == f1());
}

TEST_CASE("parse_objective") {
  SUBCASE("cobuchi disj-obj") {
    const auto o = parse_objective("objective cobuchi\nmode disj-obj\nset 0 1\nset 1 2\n", 3);
    CHECK(o.kind == ObjectiveKind::CoBuchi);
    CHECK(o.mode == CombinationMode::DisjObjective);
    REQUIRE(o.k() == 2);
    CHECK(o.sets[0] == vs(3, {1}));
    CHECK(o.sets[1] == vs(3, {2}));
  }
  SUBCASE("streett single") {
    const auto o = parse_objective("objective streett\nmode single\npair 0 L 1 U 0\n", 2);
    REQUIRE(o.k() == 1);
    CHECK(o.pairs[0].l == vs(2, {1}));
    CHECK(o.pairs[0].u == vs(2, {0}));
  }
  SUBCASE("empty L and U") {
    const auto o = parse_objective("objective rabin\nmode single\npair 0 L U\n", 2);
    CHECK(o.pairs[0].l.empty());
    CHECK(o.pairs[0].u.empty());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_objective("objective reach\nmode single\npair 0 L 1 U 0\n", 2), ParseError);
    CHECK_THROWS_AS(parse_objective("objective streett\nmode single\nset 0 1\n", 2), ParseError);
    CHECK_THROWS_AS(parse_objective("objective reach\nmode single\nset 0 7\n", 2), ParseError);
    CHECK_THROWS_AS(parse_objective("objective reach\nmode single\nset 0 1\nset 1 0\n", 2), ParseError);
    CHECK_THROWS_AS(parse_objective("objective reach\nmode disj-obj\nset 1 1\n", 2), ParseError);
    CHECK_THROWS_AS(parse_objective("objective parity\nmode single\nset 0 1\n", 2), ParseError);
    CHECK_THROWS_AS(parse_objective("objective reach\nmode sometimes\nset 0 1\n", 2), ParseError);
  }
}

TEST_CASE("serialize round trip keeps adjacency order") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Mdp m = random_mdp(30, 90, seed);
    const Mdp back = parse_mdp(serialize_mdp(m));
    CHECK(back == m);
    for (Vertex v = 0; v < 30; ++v) {
      const auto a = m.successors(v), b = back.successors(v);
      CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
  ObjectiveSpec o = pairs_objective(ObjectiveKind::Streett, CombinationMode::ConjObjective,
                                    {{vs(4, {0, 3}), vs(4, {})}, {vs(4, {}), vs(4, {1})}});
  CHECK(parse_objective(serialize_objective(o), 4) == o);
}

TEST_CASE("induced_sub_mdp") {
  const Mdp m2 = f2();
  const Mdp m3 = f3();
  const VertexSet zero = vs(2, {0}), one = vs(2, {1}), right = vs(3, {1, 2});
  CHECK(edge_set(induced_sub_mdp(m2, zero)) == std::set<std::pair<Vertex, Vertex>>{{0, 0}});
  CHECK(edge_set(induced_sub_mdp(m3, right)) == std::set<std::pair<Vertex, Vertex>>{{1, 1}, {2, 2}});
  const auto v1 = induced_sub_mdp(m2, one);
  CHECK(edge_set(v1) == std::set<std::pair<Vertex, Vertex>>{{1, 1}});
  CHECK(v1.is_random(1));
  const VertexSet all = VertexSet::full(2);
  CHECK(edge_set(induced_sub_mdp(m2, all)) == edge_set(MdpView(m2)));
  CHECK(edge_set(MdpView(m2)).size() == m2.num_edges());
}

TEST_CASE("reverse") {
  const Mdp m1 = f1();
  CHECK(edge_set(MdpView(m1).reversed()) == edge_set(MdpView(m1)));
  const Mdp chain = graph(2, {{0, 1}, {1, 1}});
  const auto r = MdpView(chain).reversed();
  CHECK(r.has_edge(1, 0));
  CHECK_FALSE(r.has_edge(0, 1));
  const Mdp m2 = f2();
  CHECK(edge_set(MdpView(m2).reversed().reversed()) == edge_set(MdpView(m2)));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Mdp m = random_mdp(20, 60, seed);
    std::set<std::pair<Vertex, Vertex>> flipped;
    for (auto [u, v] : MdpView(m).edges()) flipped.insert({v, u});
    CHECK(edge_set(MdpView(m).reversed()) == flipped);
  }
}

TEST_CASE("Mdp validation") {
  CHECK_THROWS_AS(Mdp({Owner::Player1}, {{1}}), ModelError);
  CHECK_THROWS_AS(Mdp({Owner::Player1}, {{0, 0}}), ModelError);
  CHECK_THROWS_AS(Mdp({Owner::Player1, Owner::Player1}, {{0}, {}}), ModelError);
}

TEST_CASE("predecessors are ascending by source") {
  const Mdp m = graph(4, {{3, 0}, {1, 0}, {2, 0}, {0, 0}});
  const auto p = m.predecessors(0);
  CHECK(std::vector<Vertex>(p.begin(), p.end()) == std::vector<Vertex>{0, 1, 2, 3});
}
