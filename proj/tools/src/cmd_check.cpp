#include <functional>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "qmdp/io.hpp"
#include "qmdp/oracle.hpp"
#include "qmdp/random.hpp"
#include "qmdp/reductions.hpp"
#include "qmdp/solve.hpp"

namespace qmdp::cli {
namespace {

struct CheckArgs {
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t max_n = 8;
  std::size_t max_m = 20;
  std::size_t max_k = 3;
};

struct Case {
  const char* name;
  ObjectiveKind kind;
  CombinationMode mode;
  StreettAlgo algo = StreettAlgo::Auto;
};

const std::vector<Case>& cases() {
  using K = ObjectiveKind;
  using M = CombinationMode;
  static const std::vector<Case> all = {
      {"reach single", K::Reach, M::Single},
      {"reach disj-query", K::Reach, M::DisjQuery},
      {"reach disj-obj", K::Reach, M::DisjObjective},
      {"safety single", K::Safety, M::Single},
      {"safety conj", K::Safety, M::ConjObjective},
      {"safety disj-query", K::Safety, M::DisjQuery},
      {"buchi disj-obj", K::Buchi, M::DisjObjective},
      {"buchi disj-query", K::Buchi, M::DisjQuery},
      {"buchi conj", K::Buchi, M::ConjObjective},
      {"cobuchi disj-obj", K::CoBuchi, M::DisjObjective},
      {"cobuchi disj-query", K::CoBuchi, M::DisjQuery},
      {"cobuchi conj", K::CoBuchi, M::ConjObjective},
      {"streett one-pair disj-obj", K::Streett, M::DisjObjective},
      {"streett one-pair disj-query", K::Streett, M::DisjQuery},
      {"streett basic", K::Streett, M::ConjObjective, StreettAlgo::Basic},
      {"streett impr", K::Streett, M::ConjObjective, StreettAlgo::Impr},
      {"streett dense", K::Streett, M::ConjObjective, StreettAlgo::Dense},
      {"streett sparse", K::Streett, M::ConjObjective, StreettAlgo::Sparse},
      {"rabin", K::Rabin, M::DisjObjective},
      {"rabin disj-query", K::Rabin, M::DisjQuery},
      {"buchi conj-query", K::Buchi, M::ConjQuery},
      {"reach conj-query", K::Reach, M::ConjQuery},
      {"streett conj-query", K::Streett, M::ConjQuery},
  };
  return all;
}

VertexSet random_set(Rng& rng, std::size_t n) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (rng.chance(0.3)) s.insert(v);
  return s;
}

std::string dump(const Mdp& mdp, const ObjectiveSpec& o, const VertexSet& got, const VertexSet& want) {
  auto ids = [](const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += ' ' + std::to_string(v);
    return out;
  };
  return serialize_mdp(mdp) + serialize_objective(o) + "# solver:" + ids(got) + "\n# oracle:" + ids(want) + '\n';
}

int run_check(const CheckArgs& a) {
  const auto& all = cases();
  std::vector<std::size_t> failures(all.size(), 0);
  for (std::size_t i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed + i;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t n = 1 + rng.below(a.max_n);
    const std::size_t m_hi = std::min(a.max_m, n * n);
    const std::size_t m = n + rng.below(m_hi >= n ? m_hi - n + 1 : 1);
    const Mdp mdp = random_mdp(n, m, seed);
    const std::size_t k = 1 + rng.below(a.max_k);
    std::vector<VertexSet> sets;
    std::vector<Pair> pairs;
    for (std::size_t j = 0; j < k; ++j) {
      sets.push_back(random_set(rng, n));
      pairs.push_back({random_set(rng, n), random_set(rng, n)});
    }
    for (std::size_t c = 0; c < all.size(); ++c) {
      ObjectiveSpec o;
      o.kind = all[c].kind;
      o.mode = all[c].mode;
      const std::size_t take = o.mode == CombinationMode::Single ? 1 : k;
      if (o.uses_pairs())
        o.pairs.assign(pairs.begin(), pairs.begin() + take);
      else
        o.sets.assign(sets.begin(), sets.begin() + take);
      SolveOptions opts;
      opts.streett = all[c].algo;
      const VertexSet got = solve(mdp, o, opts).winning;
      const VertexSet want = oracle_winning_set(mdp, o);
      if (!(got == want)) {
        if (failures[c]++ == 0)
          std::cout << "# first failure of " << all[c].name << " (seed " << seed << ")\n" << dump(mdp, o, got, want);
      }
    }
  }
  bool ok = true;
  for (std::size_t c = 0; c < all.size(); ++c) {
    ok = ok && failures[c] == 0;
    std::cout << (failures[c] == 0 ? "PASS " : "FAIL ") << all[c].name << ' ' << (a.count - failures[c]) << '/'
              << a.count << '\n';
  }
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

void register_check(CLI::App& app, int& status) {
  auto args = std::make_shared<CheckArgs>();
  auto* cmd = app.add_subcommand("check", "Compare every solver with the brute-force oracle on random MDPs");
  cmd->add_option("--count", args->count, "Number of random MDPs");
  cmd->add_option("--seed", args->seed, "First seed");
  cmd->add_option("--max-n", args->max_n, "Largest vertex count")->check(CLI::Range(1, 20));
  cmd->add_option("--max-m", args->max_m, "Largest edge count");
  cmd->add_option("--max-k", args->max_k, "Largest number of sets or pairs")->check(CLI::Range(1, 16));
  cmd->callback([args, &status] { status = guarded([&] { return run_check(*args); }); });
}

}  // namespace qmdp::cli
