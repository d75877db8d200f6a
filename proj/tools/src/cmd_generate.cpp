#include <cmath>
#include <iostream>
#include <memory>

#include <json.hpp>

#include "commands.hpp"
#include "qmdp/io.hpp"
#include "qmdp/reductions.hpp"

namespace qmdp::cli {
namespace {

struct GenerateArgs {
  std::string kind;
  std::uint64_t seed = 1;
  std::size_t n = 8;
  std::size_t d = 0;
  double p = 0.2;
  bool figure = false;
  std::string out;
};

std::size_t default_dimension(std::size_t count) {
  std::size_t d = 1;
  while ((std::size_t{1} << d) < count) ++d;
  return d;
}

int run_generate(const GenerateArgs& a) {
  Instance inst;
  if (a.kind.rfind("triangle", 0) == 0) {
    const SourceGraph g = !a.figure                   ? random_source_graph(a.n, a.p, a.seed)
                          : a.kind == "triangle-reach" ? figure_triangle_graph()
                                                       : figure_safety_graph();
    inst = a.kind == "triangle-reach"    ? gen_triangle_reach(g)
           : a.kind == "triangle-safety" ? gen_triangle_safety(g)
                                         : gen_triangle_safety_tree(g);
  } else {
    const OvInstance ov = !a.figure                ? random_ov(a.n, a.d == 0 ? default_dimension(a.n) : a.d, a.seed)
                          : a.kind == "ov-reach" ? figure_ov_reach()
                                                 : figure_ov_safety();
    inst = a.kind == "ov-reach" ? gen_ov_reach(ov) : gen_ov_safety(ov);
  }
  inst.info.seed = a.seed;
  write_file(a.out + ".mdp", serialize_mdp(inst.mdp));
  write_file(a.out + ".obj", serialize_objective(inst.objective));
  nlohmann::json meta;
  meta["generator"] = inst.info.generator;
  meta["seed"] = inst.info.seed;
  meta["s"] = inst.info.s;
  meta["vertices"] = inst.mdp.num_vertices();
  meta["edges"] = inst.mdp.num_edges();
  meta["names"] = inst.info.names;
  meta["notes"] = inst.info.notes;
  write_file(a.out + ".json", meta.dump(2) + '\n');
  std::cout << a.out << ".mdp " << a.out << ".obj " << a.out << ".json\n";
  return kExitOk;
}

}  // namespace

void register_generate(CLI::App& app, int& status) {
  auto args = std::make_shared<GenerateArgs>();
  auto* cmd = app.add_subcommand("generate", "Write a reduction instance from a seeded random source");
  cmd->add_option("kind", args->kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"triangle-reach", "ov-reach", "triangle-safety", "triangle-safety-tree", "ov-safety"}));
  cmd->add_option("--seed", args->seed, "PRNG seed");
  cmd->add_option("--n", args->n, "Source graph vertices, or vectors per OV set");
  cmd->add_option("--d", args->d, "OV dimension (default ceil(log2 n))");
  cmd->add_option("--p", args->p, "Source graph edge probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--figure", args->figure, "Use the fixed example source instead of a random one");
  cmd->add_option("--out", args->out, "Output prefix; writes PREFIX.mdp, PREFIX.obj, PREFIX.json")->required();
  cmd->callback([args, &status] { status = guarded([&] { return run_generate(*args); }); });
}

}  // namespace qmdp::cli
