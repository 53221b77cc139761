#pragma once

#include <optional>
#include <vector>

#include "gridlex/grid.hpp"
#include "gridlex/result.hpp"

namespace gridlex {

/// Layers B_1 x ... x {h} x ... x B_d (h at position `dim`) with every value
/// on a lower layer below every value on a higher one.
struct StackDecomposition {
  std::size_t dim = 1;                     // 1-based stacking dimension
  std::vector<std::vector<Index>> bases;   // d-1 lists, dimensions other than dim in order
  std::vector<Index> heights;              // strictly increasing

  /// The layer at heights[j] as a subgrid of the host.
  Subgrid layer(std::size_t j) const;
};

/// max over layer j < min over layer k for all j < k, bases and heights valid.
bool check_stack(const RankArray& array, const StackDecomposition& sd);

/// Red/blue anchor colouring on a 2-D increasing array, then the n x n
/// subarray spanned by one anchor interval and n-1 same-coloured anchors.
/// Falls back to an exhaustive band search below the guarantee size, so a
/// failure certifies that no n x n lexicographic subarray exists.
/// Throws PreconditionError unless the array is 2-D and increasing.
ExtractionResult fg_extract_lex_2d(const RankArray& array, std::size_t n);

/// Stack of t layers with bases of size m+1 inside the prefix [d^2 m t]^d.
/// Throws PreconditionError unless the array is increasing, every dimension
/// is at least d^2 m t and d, m, t >= 2.
std::optional<StackDecomposition> dominant_coordinate(const RankArray& array, std::size_t m,
                                                      std::size_t t);

/// Stack with at least `min_heights` layers and bases of at least `min_base`
/// indices: dominant_coordinate over every admissible (m, t), then a direct
/// stack with full bases along the dimension admitting the most layers.
std::optional<StackDecomposition> find_stack(const RankArray& array, std::size_t min_base,
                                             std::size_t min_heights);

/// n x n x n lexicographic subarray of a 3-D increasing array via block
/// colouring on the layers of a stack.
ExtractionResult extract_lex_3d(const RankArray& array, std::size_t n);

/// n x ... x n lexicographic subarray of a d-D increasing array: stack, then
/// recursive extraction per layer and a pigeonhole over (type, position).
ExtractionResult extract_lex_d(const RankArray& array, std::size_t n);

/// Monotone extraction, reflection to an increasing array and lexicographic
/// extraction, for any input array. The type carries the monotone signs.
ExtractionResult pipeline_lex_monotone(const RankArray& array, std::size_t n);

}  // namespace gridlex
