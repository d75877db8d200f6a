#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace qmdp {

/**
 * Seeded generator for instances. The engine is std::mt19937_64, whose
 * output sequence is fixed by the C++ standard (10000th draw from the default
 * seed is 9981545732273789042). Bounded draws use our own mapping instead of
 * std::uniform_int_distribution, whose algorithm is implementation-defined:
 *
 *   below(b)   = next() % b
 *   chance(p)  = (next() >> 11) * 2^-53 < p
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
  /** Fisher-Yates with below(). */
  template <class Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qmdp
