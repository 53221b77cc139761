#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridlex {

using Rank = std::uint32_t;
using Index = std::size_t;
using Dims = std::vector<std::size_t>;

/// A point of the grid. Coordinates are 1-based, one entry per dimension.
using Coord = std::vector<Index>;

class InvalidArray : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidSubgrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's input violates its documented precondition
/// (e.g. a lexicographic extraction handed a non-increasing array).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * A d-dimensional injective array stored by its ranks.
 *
 * Only the relative order of entries matters for every property in this
 * library, so values are kept as a permutation of 0..size()-1. Layout is
 * dimension-1-fastest: offset(x) = sum (x_i - 1) * stride_i, stride_1 = 1.
 * In two dimensions, dimension 1 runs left to right and dimension 2 bottom
 * to top.
 */
class RankArray {
 public:
  /// Throws InvalidArray unless dims is nonempty with positive sizes and
  /// ranks is a permutation of 0..prod(dims)-1.
  RankArray(Dims dims, std::vector<Rank> ranks);

  /// Builds the array order-isomorphic to `values` (which must be distinct).
  static RankArray from_values(Dims dims, std::span<const std::int64_t> values);

  /// Ranks in layout order, i.e. the identity permutation.
  static RankArray layout_order(Dims dims);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t ndim() const noexcept { return dims_.size(); }
  std::size_t extent(std::size_t k) const { return dims_.at(k); }
  std::size_t size() const noexcept { return ranks_.size(); }
  std::size_t stride(std::size_t k) const { return strides_.at(k); }
  std::span<const Rank> ranks() const noexcept { return ranks_; }

  std::size_t offset(const Coord& x) const;
  Coord coord_of(std::size_t offset) const;

  Rank operator[](std::size_t offset) const { return ranks_[offset]; }
  Rank at(const Coord& x) const { return ranks_[offset(x)]; }
  /// Two-dimensional access, 1-based.
  Rank at(Index x1, Index x2) const { return ranks_[(x1 - 1) + (x2 - 1) * strides_[1]]; }

  friend bool operator==(const RankArray&, const RankArray&) = default;

 private:
  Dims dims_;
  std::vector<std::size_t> strides_;
  std::vector<Rank> ranks_;
};

/// Product of a per-dimension selection of indices (1-based, strictly
/// increasing within each dimension).
struct Subgrid {
  std::vector<std::vector<Index>> indices;

  static Subgrid full(const Dims& dims);

  std::size_t ndim() const noexcept { return indices.size(); }
  Dims shape() const;
  /// Throws InvalidSubgrid if the selection is not valid for `dims`.
  void validate(const Dims& dims) const;

  friend bool operator==(const Subgrid&, const Subgrid&) = default;
  friend auto operator<=>(const Subgrid&, const Subgrid&) = default;
};

/// Sign vector in {-1,+1}^d: +1 where lines increase along that dimension.
struct MonotonicityPattern {
  std::vector<int> signs;

  friend bool operator==(const MonotonicityPattern&, const MonotonicityPattern&) = default;
  friend auto operator<=>(const MonotonicityPattern&, const MonotonicityPattern&) = default;
};

/**
 * Coordinate priority plus reflections describing a lex-monotone order.
 *
 * `sigma` lists 1-based dimension numbers from most to least significant;
 * `signs[k]` belongs to dimension k+1. An array has this type iff
 * f(x) < f(y) exactly when (s_sigma(1) x_sigma(1), ...) <lex (s_sigma(1) y_sigma(1), ...).
 */
struct LexType {
  std::vector<int> sigma;
  std::vector<int> signs;

  std::size_t ndim() const noexcept { return sigma.size(); }
  /// Throws std::invalid_argument if sigma is not a permutation of 1..d or a
  /// sign is not +-1.
  void validate() const;

  /// Type with all signs +1.
  static LexType plain(std::vector<int> sigma);

  friend bool operator==(const LexType&, const LexType&) = default;
  friend auto operator<=>(const LexType&, const LexType&) = default;
};

/// All d!*2^d types: sigma in lexicographic order, and for each sigma the sign
/// vectors ordered with + before - (first dimension most significant).
std::vector<LexType> all_lex_types(std::size_t d);

/// The d! types with all signs +1, sigma in lexicographic order.
std::vector<LexType> plain_lex_types(std::size_t d);

std::string to_string(const LexType& lt);
std::string to_string(const MonotonicityPattern& p);

/// Subarray on `sub`, re-ranked to 0..m-1 preserving relative order.
RankArray restrict(const RankArray& array, const Subgrid& sub);

/// The (d-1)-dimensional array at position `index` along dimension `dim`
/// (1-based). A 1-dimensional array yields a single cell.
RankArray slice(const RankArray& array, std::size_t dim, Index index);

bool is_increasing(const RankArray& array);

/// First unit step (cell, dimension 1-based) along which the array decreases.
std::optional<std::pair<Coord, std::size_t>> find_decreasing_step(const RankArray& array);

/// Global pattern if every line along each dimension has a common direction.
/// Size-1 dimensions report +1.
std::optional<MonotonicityPattern> monotone_pattern(const RankArray& array);

bool is_inconsistently_monotone(const RankArray& array);

/// Direction of the line through `point` along each dimension. Throws
/// NotApplicable if one of those lines is not strictly monotone.
MonotonicityPattern pattern_at(const RankArray& array, const Coord& point);

/// Position of the cell `offset` in the order described by `lt`.
std::size_t lex_position(const Dims& dims, const LexType& lt, std::size_t offset);

bool lex_type_check(const RankArray& array, const LexType& lt);

/// The type of a lex-monotone array. Unique when every size is >= 2;
/// otherwise the lexicographically smallest sigma with +1 on size-1 dimensions.
std::optional<LexType> detect_lex_type(const RankArray& array);

/// An increasing array obtained by reflecting dimensions, together with the
/// map back to the source coordinates.
struct Normalized {
  RankArray array;
  MonotonicityPattern reflected;  // -1 where the dimension was reversed

  Index to_source(std::size_t dim, Index index) const;
  Subgrid to_source(const Subgrid& sub) const;
};

/// Reflects every dimension with sign -1. Throws PreconditionError if the
/// array is not monotone with exactly that pattern.
Normalized normalize_to_increasing(const RankArray& array, const MonotonicityPattern& pattern);

/// Re-indexes `inner` (a subgrid of restrict(host, outer)) into host coordinates.
Subgrid compose(const Subgrid& outer, const Subgrid& inner);

}  // namespace gridlex
