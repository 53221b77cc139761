#pragma once

#include <cstdint>

#include "gridlex/grid.hpp"

namespace gridlex {

/// The array of type `lt`: cells ranked in signed, permuted lexicographic order.
RankArray gen_lex(const Dims& dims, const LexType& lt);

/// (n-1)(n-2) x (n-1)^2 block: vertical strips of width n-1, each strip of
/// type (2,1), strips increasing left to right. Requires n >= 3.
RankArray gen_block_g(std::size_t n);

/// (n-1)^2 x (n-1)(n-2) block: horizontal bands of height n-1, each band of
/// type (1,2), bands increasing bottom to top. Requires n >= 3.
RankArray gen_block_h(std::size_t n);

/// Index ranges and region map of the N x N lower-bound array, N = 2n^2-5n+3.
struct F2Layout {
  std::size_t n, size;
  std::size_t i_end, j_end;  // I = [1, i_end], J = [i_end+1, j_end], K = [j_end+1, size]

  explicit F2Layout(std::size_t n);
  /// Region number 1..5 of a cell.
  int region(Index x1, Index x2) const;
};

/// Increasing N x N array with no n x n lexicographic subarray, assembled
/// from copies of the g and h blocks. Requires n >= 3.
RankArray gen_f2_lower(std::size_t n);

/// Uniformly random permutation of ranks.
RankArray gen_random(const Dims& dims, std::uint64_t seed);

/// Random increasing array built by repeatedly ranking a uniformly chosen
/// currently-minimal cell. Not uniform over linear extensions.
RankArray gen_random_increasing(const Dims& dims, std::uint64_t seed);

}  // namespace gridlex
