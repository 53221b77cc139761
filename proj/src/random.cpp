#include "gridlex/random.hpp"

#include <limits>
#include <stdexcept>

namespace gridlex {

std::size_t Rng::uniform_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index bound must be positive");
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

}  // namespace gridlex
