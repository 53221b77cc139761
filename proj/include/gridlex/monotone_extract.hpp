#pragma once

#include <span>
#include <vector>

#include "gridlex/grid.hpp"
#include "gridlex/result.hpp"

namespace gridlex {

struct MonotoneSubsequence {
  std::vector<Index> indices;  // 1-based, strictly increasing
  int direction = 1;           // +1 increasing, -1 decreasing
};

/// Longest strictly monotone subsequence. Increasing wins ties in length;
/// among equals the lexicographically smallest index sequence is returned.
MonotoneSubsequence es_monotone_subsequence(std::span<const Rank> seq);
MonotoneSubsequence es_monotone_subsequence(const RankArray& seq);

/// n x t monotone subarray (n along dimension 1, t along dimension 2).
/// Guaranteed for dims >= (4n^2, (2t)^(2^(2n))).
ExtractionResult extract_monotone_2d(const RankArray& array, std::size_t n, std::size_t t);

/// n x ... x n inconsistently monotone subarray, recursing on the slices
/// orthogonal to the last dimension.
ExtractionResult extract_inconsistent(const RankArray& array, std::size_t n);

/// n x ... x n monotone subarray: the largest inconsistently monotone
/// subarray found is coloured by pointwise pattern and Ramsey-reduced.
ExtractionResult extract_monotone_d(const RankArray& array, std::size_t n);

/// n x n x n monotone subarray via 2-D extraction on every layer along
/// dimension 3, a Ramsey step on layer pairs and a monochromatic clique.
ExtractionResult extract_monotone_3d(const RankArray& array, std::size_t n);

}  // namespace gridlex
