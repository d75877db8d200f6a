#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qmdp/mdp.hpp"
#include "qmdp/objective.hpp"

namespace qmdp {

/**
 * Text format:
 *
 *   mdp
 *   vertices <n>
 *   random <id>*        (any number of lines)
 *   edge <u> <v>        (one per line, order is adjacency order)
 *
 * '#' starts a comment. Throws ParseError with a line number, including for
 * model violations (duplicate edge, sink without `self_loop_sinks`).
 */
Mdp parse_mdp(std::string_view text, BuildOptions opts = {});
std::string serialize_mdp(const Mdp& mdp);

/**
 *   objective <reach|safety|buchi|cobuchi|streett|rabin>
 *   mode <single|conj-obj|disj-obj|conj-query|disj-query>
 *   set <i> <v>*                 (reach, safety, buchi, cobuchi)
 *   pair <i> L <v>* U <v>*       (streett, rabin)
 *
 * Indices i run 0..k-1 in order.
 */
ObjectiveSpec parse_objective(std::string_view text, std::size_t n);
std::string serialize_objective(const ObjectiveSpec& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace qmdp
