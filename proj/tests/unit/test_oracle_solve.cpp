#include <doctest.h>

#include <deque>

#include "qmdp/error.hpp"
#include "qmdp/oracle.hpp"
#include "qmdp/random.hpp"
#include "qmdp/reach.hpp"
#include "qmdp/reductions.hpp"
#include "qmdp/solve.hpp"
#include "support/fixtures.hpp"

using namespace qmdp;
using namespace qmdp::testing;

namespace {

// player 1 moves to a neighbour closer to t inside w
std::vector<Vertex> descend_strategy(const Mdp& mdp, const VertexSet& w, const VertexSet& t) {
  const std::size_t n = mdp.num_vertices();
  std::vector<std::size_t> dist(n, n + 1);
  std::deque<Vertex> q;
  for (Vertex v : t) {
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    for (Vertex u : mdp.predecessors(v))
      if (w.contains(u) && dist[u] > n) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
  }
  std::vector<Vertex> strat(n);
  for (Vertex v = 0; v < n; ++v) {
    strat[v] = mdp.successors(v)[0];
    for (Vertex s : mdp.successors(v))
      if (dist[s] < dist[strat[v]]) strat[v] = s;
  }
  return strat;
}

}  // namespace

TEST_CASE("oracle on the small examples") {
  CHECK(oracle_mecs(f1()) == std::vector<VertexSet>{vs(1, {0})});
  CHECK(oracle_mecs(f2()) == std::vector<VertexSet>{vs(2, {0, 1})});
  CHECK(oracle_mecs(f3()) == std::vector<VertexSet>{vs(3, {1}), vs(3, {2})});
  const auto streett = [](const VertexSet& x) { return !x.intersects(vs(2, {1})) || x.intersects(vs(2, {0})); };
  CHECK(oracle_good_ecs(f2(), streett) == std::vector<VertexSet>{vs(2, {0}), vs(2, {0, 1})});
  const auto rabin = [](const VertexSet& x) { return x.intersects(vs(2, {1})) && !x.intersects(vs(2, {0})); };
  CHECK(oracle_good_ecs(f2(), rabin).empty());
  CHECK(oracle_as_reach(f3(), vs(3, {2})) == vs(3, {2}));
  CHECK(oracle_as_reach(f2(), vs(2, {1})) == vs(2, {0, 1}));
  CHECK(oracle_attractor(f3(), VertexSet::full(3), vs(3, {1})) == vs(3, {0, 1}));
  CHECK(oracle_is_end_component(f3(), vs(3, {1})));
  CHECK_FALSE(oracle_is_end_component(f3(), vs(3, {0, 1})));
}

TEST_CASE("oracle refuses large inputs") {
  const Mdp big = random_mdp(kOracleMaxVertices + 1, 3 * (kOracleMaxVertices + 1), 1);
  CHECK_THROWS_AS(oracle_mecs(big), PreconditionError);
}

TEST_CASE("Monte-Carlo agrees with almost-sure reachability") {
  Rng rng(11);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const Mdp mdp = random_mdp(n, n + rng.below(n + 1), seed, RandomMdpOptions{0.5});
    const VertexSet t = random_sets(rng, n, 1, 0.25)[0];
    const VertexSet w = oracle_as_reach(mdp, t);
    const auto strat = descend_strategy(mdp, w, t);
    for (Vertex v : w) {
      CAPTURE(seed);
      CHECK(sample_reach_frequency(mdp, t, strat, v, 100, 4000, seed) == doctest::Approx(1.0));
      ++checked;
    }
  }
  CHECK(checked > 20);
  // a coin between a trap and the target
  const Mdp coin({Owner::Random, Owner::Player1, Owner::Player1}, {{1, 2}, {1}, {2}});
  const double f = sample_reach_frequency(coin, vs(3, {2}), {0, 1, 2}, 0, 4000, 10, 3);
  CHECK(f > 0.45);
  CHECK(f < 0.55);
  CHECK_FALSE(oracle_as_reach(coin, vs(3, {2})).contains(0));
}

TEST_CASE("solve dispatch names") {
  const Mdp m = f2();
  const auto one = [](ObjectiveKind kind, CombinationMode mode) {
    return sets_objective(kind, mode, {vs(2, {1})});
  };
  CHECK(solve(m, one(ObjectiveKind::Reach, CombinationMode::Single)).algo == "reach");
  CHECK(solve(m, one(ObjectiveKind::Reach, CombinationMode::DisjObjective)).algo == "reach-union");
  CHECK(solve(m, one(ObjectiveKind::Reach, CombinationMode::DisjQuery)).algo == "reach-disj-query");
  CHECK(solve(m, one(ObjectiveKind::Reach, CombinationMode::ConjQuery)).algo == "reach-conj-query");
  CHECK(solve(m, one(ObjectiveKind::Safety, CombinationMode::ConjObjective)).algo == "safety-union");
  CHECK(solve(m, one(ObjectiveKind::Buchi, CombinationMode::ConjObjective)).algo == "buchi-conj");
  CHECK(solve(m, one(ObjectiveKind::CoBuchi, CombinationMode::DisjQuery)).algo == "cobuchi-disj-query");
  const ObjectiveSpec st = pairs_objective(ObjectiveKind::Streett, CombinationMode::Single, {{vs(2, {1}), vs(2, {0})}});
  CHECK(solve(m, st, {StreettAlgo::Dense}).algo == "streett-dense");
  CHECK(solve(m, st).algo.rfind("streett-", 0) == 0);
  CHECK(solve(m, st).algo != "streett-auto");
  const ObjectiveSpec rb = pairs_objective(ObjectiveKind::Rabin, CombinationMode::DisjQuery, {{vs(2, {1}), vs(2, {0})}});
  CHECK(solve(m, rb).algo == "rabin-disj-query");
  const Mdp g = graph(2, {{0, 1}, {1, 0}});
  CHECK(solve(g, sets_objective(ObjectiveKind::Safety, CombinationMode::DisjObjective, {vs(2, {0}), vs(2, {1})})).algo ==
        "safety-disj-graph");
  CHECK(solve(g, sets_objective(ObjectiveKind::CoBuchi, CombinationMode::DisjObjective, {vs(2, {0})}), {StreettAlgo::Auto, true})
            .algo == "cobuchi-singleton");
}

TEST_CASE("solve rejects unsupported combinations") {
  const Mdp m = f2();
  const std::vector<VertexSet> two{vs(2, {0}), vs(2, {1})};
  CHECK_THROWS_AS(solve(m, sets_objective(ObjectiveKind::Reach, CombinationMode::ConjObjective, two)), UnsupportedError);
  CHECK_THROWS_AS(solve(m, sets_objective(ObjectiveKind::Safety, CombinationMode::DisjObjective, two)), UnsupportedError);
  CHECK_THROWS_AS(solve(m, pairs_objective(ObjectiveKind::Rabin, CombinationMode::ConjObjective,
                                           {{vs(2, {0}), vs(2, {1})}, {vs(2, {1}), vs(2, {0})}})),
                  UnsupportedError);
  // singleton needs coBuchi on a graph with singleton targets
  CHECK_THROWS_AS(solve(m, sets_objective(ObjectiveKind::CoBuchi, CombinationMode::DisjObjective, two), {StreettAlgo::Auto, true}),
                  UnsupportedError);
  const Mdp g = graph(2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(solve(g, sets_objective(ObjectiveKind::Buchi, CombinationMode::DisjObjective, two), {StreettAlgo::Auto, true}),
                  UnsupportedError);
  CHECK_THROWS_AS(solve(g, sets_objective(ObjectiveKind::CoBuchi, CombinationMode::DisjObjective, {vs(2, {0, 1})}),
                        {StreettAlgo::Auto, true}),
                  UnsupportedError);
  CHECK_THROWS_AS(solve(g, sets_objective(ObjectiveKind::Reach, CombinationMode::Single, two)), ModelError);
}

TEST_CASE("solve matches the oracle on every supported shape") {
  Rng rng(5);
  const ObjectiveKind kinds[] = {ObjectiveKind::Reach,   ObjectiveKind::Safety,  ObjectiveKind::Buchi,
                                 ObjectiveKind::CoBuchi, ObjectiveKind::Streett, ObjectiveKind::Rabin};
  const CombinationMode modes[] = {CombinationMode::Single, CombinationMode::ConjObjective, CombinationMode::DisjObjective,
                                   CombinationMode::ConjQuery, CombinationMode::DisjQuery};
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const Mdp mdp = random_mdp(n, 2 * n + rng.below(n), seed, seed % 2 ? RandomMdpOptions{0.5} : RandomMdpOptions{0.0});
    for (auto kind : kinds)
      for (auto mode : modes) {
        const std::size_t k = mode == CombinationMode::Single ? 1 : 1 + rng.below(3);
        const ObjectiveSpec obj = (kind == ObjectiveKind::Streett || kind == ObjectiveKind::Rabin)
                                      ? pairs_objective(kind, mode, random_pairs(rng, n, k))
                                      : sets_objective(kind, mode, random_sets(rng, n, k));
        VertexSet expect, got;
        bool oracle_unsupported = false, solver_unsupported = false;
        try {
          expect = oracle_winning_set(mdp, obj);
        } catch (const UnsupportedError&) {
          oracle_unsupported = true;
        }
        try {
          got = solve(mdp, obj).winning;
        } catch (const UnsupportedError&) {
          solver_unsupported = true;
        }
        CAPTURE(seed);
        CAPTURE(to_string(kind));
        CAPTURE(to_string(mode));
        if (oracle_unsupported) CHECK(solver_unsupported);
        if (solver_unsupported || oracle_unsupported) continue;
        CHECK(show(got) == show(expect));
        ++compared;
      }
  }
  CHECK(compared > 1500);
}

TEST_CASE("conjunctive query is the intersection of single queries") {
  Rng rng(9);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 4 + seed % 10;
    const Mdp mdp = random_mdp(n, 3 * n, seed, RandomMdpOptions{0.4});
    const auto sets = random_sets(rng, n, 3);
    VertexSet all = VertexSet::full(n);
    for (const auto& s : sets) all &= solve(mdp, sets_objective(ObjectiveKind::Buchi, CombinationMode::Single, {s})).winning;
    CHECK(solve(mdp, sets_objective(ObjectiveKind::Buchi, CombinationMode::ConjQuery, sets)).winning == all);
  }
}
