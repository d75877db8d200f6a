#include "qmdp/objective.hpp"

#include <array>
#include <string>

#include "qmdp/error.hpp"

namespace qmdp {
namespace {

constexpr std::array<std::pair<ObjectiveKind, std::string_view>, 6> kKinds{{
    {ObjectiveKind::Reach, "reach"},
    {ObjectiveKind::Safety, "safety"},
    {ObjectiveKind::Buchi, "buchi"},
    {ObjectiveKind::CoBuchi, "cobuchi"},
    {ObjectiveKind::Streett, "streett"},
    {ObjectiveKind::Rabin, "rabin"},
}};

constexpr std::array<std::pair<CombinationMode, std::string_view>, 5> kModes{{
    {CombinationMode::Single, "single"},
    {CombinationMode::ConjObjective, "conj-obj"},
    {CombinationMode::DisjObjective, "disj-obj"},
    {CombinationMode::ConjQuery, "conj-query"},
    {CombinationMode::DisjQuery, "disj-query"},
}};

}  // namespace

std::string_view to_string(ObjectiveKind kind) {
  for (auto& [k, s] : kKinds)
    if (k == kind) return s;
  return "?";
}

std::string_view to_string(CombinationMode mode) {
  for (auto& [m, s] : kModes)
    if (m == mode) return s;
  return "?";
}

std::optional<ObjectiveKind> parse_kind(std::string_view s) {
  for (auto& [k, name] : kKinds)
    if (name == s) return k;
  return std::nullopt;
}

std::optional<CombinationMode> parse_mode(std::string_view s) {
  for (auto& [m, name] : kModes)
    if (name == s) return m;
  return std::nullopt;
}

VertexSet ObjectiveSpec::set_union(std::size_t universe) const {
  VertexSet out(universe);
  for (const auto& s : sets) out |= s;
  return out;
}

void ObjectiveSpec::validate(std::size_t n) const {
  if (uses_pairs()) {
    if (!sets.empty()) throw ModelError(std::string(to_string(kind)) + " objective takes pairs, not sets");
  } else if (!pairs.empty()) {
    throw ModelError(std::string(to_string(kind)) + " objective takes sets, not pairs");
  }
  if (mode == CombinationMode::Single && k() != 1)
    throw ModelError("mode single needs exactly one set or pair, got " + std::to_string(k()));
  for (const auto& s : sets)
    if (s.universe() != n) throw ModelError("target set universe does not match the mdp");
  for (const auto& p : pairs)
    if (p.l.universe() != n || p.u.universe() != n) throw ModelError("pair universe does not match the mdp");
}

}  // namespace qmdp
