#include "qmdp/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace qmdp {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  s.count_ = universe;
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe " + std::to_string(n_));
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (v >= n_) return false;
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --count_;
  return true;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
  count_ = 0;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v : *this) out.push_back(v);
  return out;
}

void VertexSet::check_universe(const VertexSet& o) const {
  if (o.n_ != n_) throw std::invalid_argument("vertex sets over different universes");
}

void VertexSet::recount() {
  count_ = 0;
  for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

}  // namespace qmdp
