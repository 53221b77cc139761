#pragma once

#include <cstddef>
#include <string>

namespace gridlex {

/// Wide unsigned counter for closed-form candidate counts.
using Count = unsigned __int128;

Count binomial(std::size_t n, std::size_t k);

std::string to_string(Count c);

}  // namespace gridlex
