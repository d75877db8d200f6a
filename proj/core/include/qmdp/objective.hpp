#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmdp/vertex_set.hpp"

namespace qmdp {

enum class ObjectiveKind { Reach, Safety, Buchi, CoBuchi, Streett, Rabin };

/**
 * How the k sets or pairs combine. Single needs exactly one. Streett with
 * several pairs is ConjObjective, Rabin with several pairs is DisjObjective.
 */
enum class CombinationMode { Single, ConjObjective, DisjObjective, ConjQuery, DisjQuery };

/** Streett/Rabin pair (L, U). */
struct Pair {
  VertexSet l;
  VertexSet u;
  friend bool operator==(const Pair&, const Pair&) = default;
};

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::Reach;
  CombinationMode mode = CombinationMode::Single;
  std::vector<VertexSet> sets;  // Reach, Safety, Buchi, CoBuchi
  std::vector<Pair> pairs;      // Streett, Rabin

  bool uses_pairs() const noexcept {
    return kind == ObjectiveKind::Streett || kind == ObjectiveKind::Rabin;
  }
  std::size_t k() const noexcept { return uses_pairs() ? pairs.size() : sets.size(); }
  /** Union of all target sets. */
  VertexSet set_union(std::size_t universe) const;
  /** Throws ModelError if the shape does not fit kind/mode or universe n. */
  void validate(std::size_t n) const;

  friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

std::string_view to_string(ObjectiveKind kind);
std::string_view to_string(CombinationMode mode);
std::optional<ObjectiveKind> parse_kind(std::string_view s);
std::optional<CombinationMode> parse_mode(std::string_view s);

}  // namespace qmdp
