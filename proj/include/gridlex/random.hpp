#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace gridlex {

/// Seeded generator with platform-independent derived draws.
///
/// std::uniform_int_distribution and std::shuffle are implementation-defined,
/// so the draws here are built directly on the 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t uniform_index(std::size_t bound);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gridlex
