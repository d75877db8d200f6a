#include <doctest.h>

#include "qmdp/buchi_cobuchi.hpp"
#include "qmdp/oracle.hpp"
#include "qmdp/rabin.hpp"
#include "qmdp/reach.hpp"
#include "qmdp/safety.hpp"
#include "qmdp/streett.hpp"
#include "support/fixtures.hpp"

using namespace qmdp;
using namespace qmdp::testing;

TEST_CASE("small random MDPs agree with the oracle") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const std::size_t m = n + rng.below(std::min<std::size_t>(20, n * n) - n + 1);
    const Mdp mdp = random_mdp(n, m, seed);
    const std::size_t k = 1 + rng.below(3);
    auto sets = random_sets(rng, n, k);
    auto pairs = random_pairs(rng, n, k);
    CAPTURE(seed);
    CAPTURE(n);
    using K = ObjectiveKind;
    using M = CombinationMode;
    auto oracle = [&](K kind, M mode) {
      return oracle_winning_set(mdp, kind == K::Streett || kind == K::Rabin ? pairs_objective(kind, mode, pairs)
                                                                            : sets_objective(kind, mode, sets));
    };
    auto single = [&](K kind) { return oracle_winning_set(mdp, sets_objective(kind, M::Single, {sets[0]})); };
    CHECK(as_reach_single(mdp, sets[0]) == single(K::Reach));
    CHECK(as_reach_disj_query(mdp, sets) == oracle(K::Reach, M::DisjQuery));
    CHECK(as_reach_disj_objective(mdp, sets) == oracle(K::Reach, M::DisjObjective));
    CHECK(as_safety_single(mdp, sets[0]) == single(K::Safety));
    CHECK(as_safety_conj(mdp, sets) == oracle(K::Safety, M::ConjObjective));
    CHECK(as_safety_disj_query(mdp, sets) == oracle(K::Safety, M::DisjQuery));
    CHECK(as_buchi_disj_objective(mdp, sets) == oracle(K::Buchi, M::DisjObjective));
    CHECK(as_buchi_disj_query(mdp, sets) == oracle(K::Buchi, M::DisjQuery));
    CHECK(as_buchi_conj(mdp, sets) == oracle(K::Buchi, M::ConjObjective));
    CHECK(as_cobuchi_disj_objective(mdp, sets) == oracle(K::CoBuchi, M::DisjObjective));
    CHECK(as_cobuchi_disj_query(mdp, sets) == oracle(K::CoBuchi, M::DisjQuery));
    CHECK(as_cobuchi_conj(mdp, sets) == oracle(K::CoBuchi, M::ConjObjective));
    CHECK(one_pair_streett_disj(mdp, pairs, false) == oracle(K::Streett, M::DisjObjective));
    CHECK(one_pair_streett_disj(mdp, pairs, true) == oracle(K::Streett, M::DisjQuery));
    for (auto algo : {StreettAlgo::Basic, StreettAlgo::Impr, StreettAlgo::Dense, StreettAlgo::Sparse})
      CHECK_MESSAGE(as_streett(mdp, pairs, algo) == oracle(K::Streett, M::ConjObjective), to_string(algo));
    CHECK(as_rabin(mdp, pairs) == oracle(K::Rabin, M::DisjObjective));
    CHECK(as_rabin_disj_query(mdp, pairs) == oracle(K::Rabin, M::DisjQuery));
  }
}
