#include "gridlex/count.hpp"

#include <algorithm>

namespace gridlex {

Count binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

std::string to_string(Count c) {
  if (c == 0) return "0";
  std::string s;
  while (c > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace gridlex
