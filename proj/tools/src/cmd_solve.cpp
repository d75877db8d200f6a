#include <chrono>
#include <iostream>
#include <memory>

#include <json.hpp>

#include "commands.hpp"
#include "qmdp/io.hpp"
#include "qmdp/mec.hpp"
#include "qmdp/solve.hpp"

namespace qmdp::cli {
namespace {

struct SolveArgs {
  std::string mdp;
  std::string objective;
  std::string algo = "auto";
  bool nonempty = false;
  bool normalize = false;
  bool json = false;
  bool singleton = false;
};

void print_ids(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += std::to_string(v) + '\n';
  std::cout << out;
}

int run_solve(const SolveArgs& a) {
  const Mdp mdp = parse_mdp(read_file(a.mdp), BuildOptions{a.normalize});
  const ObjectiveSpec objective = parse_objective(read_file(a.objective), mdp.num_vertices());
  SolveOptions opts;
  opts.streett = *parse_streett_algo(a.algo);
  opts.singleton = a.singleton;

  const auto start = std::chrono::steady_clock::now();
  const SolveResult r = solve(mdp, objective, opts);
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();

  if (a.json) {
    nlohmann::json j;
    j["winning"] = r.winning.to_vector();
    j["algo"] = r.algo;
    j["timings"] = {{"solve_ns", ns}};
    if (a.nonempty) j["nonempty"] = !r.winning.empty();
    const auto& norm = mdp.normalization();
    j["normalization"] = {{"random_self_loops", norm.random_self_loops}, {"sink_self_loops", norm.sink_self_loops}};
    std::cout << j.dump() << '\n';
  } else if (a.nonempty) {
    std::cout << (r.winning.empty() ? "no" : "yes") << '\n';
  } else {
    print_ids(r.winning);
  }
  return kExitOk;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += ' ' + std::to_string(v);
  return out;
}

}  // namespace

void register_solve(CLI::App& app, int& status) {
  auto args = std::make_shared<SolveArgs>();
  auto* cmd = app.add_subcommand("solve", "Print the almost-sure winning set");
  cmd->add_option("--mdp", args->mdp, "MDP file")->required();
  cmd->add_option("--objective", args->objective, "Objective file")->required();
  cmd->add_option("--algo", args->algo, "Streett algorithm")
      ->check(CLI::IsMember({"basic", "impr", "dense", "sparse", "auto"}));
  cmd->add_flag("--nonempty", args->nonempty, "Print yes/no instead of the set");
  cmd->add_flag("--normalize", args->normalize, "Give vertices without successors a self-loop");
  cmd->add_flag("--json", args->json, "Machine-readable output");
  cmd->add_flag("--singleton", args->singleton, "Linear-time coBuchi on graphs with singleton targets");
  cmd->callback([args, &status] { status = guarded([&] { return run_solve(*args); }); });
}

void register_mec(CLI::App& app, int& status) {
  struct MecArgs {
    std::string mdp;
    bool normalize = false;
  };
  auto args = std::make_shared<MecArgs>();
  auto* cmd = app.add_subcommand("mec", "Print the MEC decomposition, one MEC per line, then the residual");
  cmd->add_option("--mdp", args->mdp, "MDP file")->required();
  cmd->add_flag("--normalize", args->normalize, "Give vertices without successors a self-loop");
  cmd->callback([args, &status] {
    status = guarded([&] {
      const Mdp mdp = parse_mdp(read_file(args->mdp), BuildOptions{args->normalize});
      const auto& d = mecs_of(mdp);
      std::string out;
      for (const auto& mec : d.mecs) out += "mec" + join(mec) + '\n';
      out += "residual" + join(d.residual) + '\n';
      std::cout << out;
      return kExitOk;
    });
  });
}

}  // namespace qmdp::cli
