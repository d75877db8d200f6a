#include <chrono>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "qmdp/random.hpp"
#include "qmdp/reductions.hpp"
#include "qmdp/solve.hpp"

namespace qmdp::cli {
namespace {

struct BenchArgs {
  std::string suite;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::size_t reps = 1;
};

struct Row {
  std::string generator;
  std::size_t n, m, k;
  std::string algo;
  std::int64_t ns;
  std::string hash;
};

void emit(const Row& r) {
  std::cout << r.generator << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.algo << ',' << r.ns << ',' << r.hash
            << '\n';
}

/** Best of `reps` runs. */
template <class F>
std::pair<std::int64_t, SolveResult> timed(std::size_t reps, F&& f) {
  std::int64_t best = -1;
  SolveResult result;
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    result = f();
    const auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    if (best < 0 || ns < best) best = ns;
  }
  return {best, std::move(result)};
}

VertexSet random_set(Rng& rng, std::size_t n, std::size_t size) {
  VertexSet s(n);
  for (std::size_t i = 0; i < size; ++i) s.insert(static_cast<Vertex>(rng.below(n)));
  return s;
}

void reach_k(const BenchArgs& a) {
  for (std::size_t n : a.sizes) {
    const Mdp base = random_mdp(n, 4 * n, a.seed, RandomMdpOptions{0.3, 16, 0.1});
    Rng rng(a.seed + n);
    std::vector<VertexSet> all;
    for (std::size_t i = 0; i < 64; ++i) all.push_back(random_set(rng, n, 1 + n / 1000));
    for (std::size_t k = 1; k <= 64; k *= 2) {
      ObjectiveSpec o;
      o.kind = ObjectiveKind::Reach;
      o.mode = CombinationMode::DisjQuery;
      o.sets.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
      auto [ns, w] = timed(a.reps, [&] {
        // a fresh Mdp, so the MEC decomposition is part of the time
        const Mdp fresh(base.owners(), base.adjacency());
        return solve(fresh, o);
      });
      emit({"random-mdp", n, base.num_edges(), k, w.algo, ns, result_hash(w.winning)});
    }
  }
}

void streett_variants(const BenchArgs& a) {
  for (std::size_t n : a.sizes) {
    const Mdp mdp = random_mdp(n, 4 * n, a.seed, RandomMdpOptions{0.3, 16, 0.1});
    Rng rng(a.seed + n);
    ObjectiveSpec o;
    o.kind = ObjectiveKind::Streett;
    o.mode = CombinationMode::ConjObjective;
    for (std::size_t i = 0; i < 16; ++i) {
      Pair p{VertexSet(n), VertexSet(n)};
      for (Vertex v = 0; v < n; ++v) {
        if (rng.chance(0.2)) p.l.insert(v);
        if (rng.chance(0.04)) p.u.insert(v);
      }
      o.pairs.push_back(std::move(p));
    }
    for (auto algo : {StreettAlgo::Basic, StreettAlgo::Impr, StreettAlgo::Dense, StreettAlgo::Sparse}) {
      auto [ns, w] = timed(a.reps, [&] { return solve(mdp, o, SolveOptions{algo, false}); });
      emit({"random-mdp", n, mdp.num_edges(), o.k(), w.algo, ns, result_hash(w.winning)});
    }
  }
}

void reductions(const BenchArgs& a) {
  for (std::size_t n : a.sizes) {
    const SourceGraph g = random_source_graph(n, 0.2, a.seed);
    std::size_t d = 1;
    while ((std::size_t{1} << d) < n) ++d;
    const OvInstance ov = random_ov(n, d, a.seed);
    for (const Instance& inst : {gen_triangle_reach(g), gen_triangle_safety(g), gen_triangle_safety_tree(g),
                                 gen_ov_reach(ov), gen_ov_safety(ov)}) {
      auto [ns, w] = timed(a.reps, [&] {
        const Mdp fresh(inst.mdp.owners(), inst.mdp.adjacency());
        return solve(fresh, inst.objective);
      });
      emit({inst.info.generator, inst.mdp.num_vertices(), inst.mdp.num_edges(), inst.objective.k(), w.algo, ns,
            result_hash(w.winning)});
    }
  }
}

int run_bench(const BenchArgs& a) {
  std::cout << "generator,n,m,k,algo,wall_time_ns,result_hash\n";
  if (a.suite == "reach-k") reach_k(a);
  if (a.suite == "streett-variants") streett_variants(a);
  if (a.suite == "reductions") reductions(a);
  return kExitOk;
}

}  // namespace

void register_bench(CLI::App& app, int& status) {
  auto args = std::make_shared<BenchArgs>();
  auto* cmd = app.add_subcommand("bench", "Time a benchmark suite; CSV on stdout (header only without a suite)");
  cmd->add_option("--suite", args->suite, "Suite")->check(CLI::IsMember({"", "reach-k", "streett-variants", "reductions"}));
  cmd->add_option("--sizes", args->sizes, "Instance sizes")->delimiter(',');
  cmd->add_option("--seed", args->seed, "PRNG seed");
  cmd->add_option("--reps", args->reps, "Runs per row; the minimum time is reported");
  cmd->callback([args, &status] { status = guarded([&] { return run_bench(*args); }); });
}

}  // namespace qmdp::cli
