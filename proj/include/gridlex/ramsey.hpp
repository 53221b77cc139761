#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridlex/grid.hpp"

namespace gridlex {

using Color = std::uint32_t;

/// Vertex colouring of a grid, stored in RankArray layout.
struct GridColoring {
  Dims dims;
  std::vector<Color> colors;
  Color k = 1;

  /// Throws std::invalid_argument on a size mismatch or a colour >= k.
  void validate() const;
  Color at(Index x1, Index x2) const { return colors[(x1 - 1) + (x2 - 1) * dims[0]]; }
};

/// Colouring of the edges of a complete graph on vertices 1..n_vertices.
class EdgeColoring {
 public:
  EdgeColoring(std::size_t n_vertices, Color k, Color fill = 0);

  std::size_t n_vertices() const noexcept { return n_; }
  Color k() const noexcept { return k_; }
  Color color(std::size_t u, std::size_t v) const { return colors_[pair_index(u, v)]; }
  void set(std::size_t u, std::size_t v, Color c);

 private:
  std::size_t pair_index(std::size_t u, std::size_t v) const;

  std::size_t n_;
  Color k_;
  std::vector<Color> colors_;
};

struct MonoRect {
  std::vector<Index> rows;  // t indices along dimension 1
  std::vector<Index> cols;  // n indices along dimension 2
  Color color;
};

/**
 * A monochromatic t x n subgrid of a 2-D colouring.
 *
 * Every dimension-1 index contributes the first n positions of its smallest
 * colour occurring at least n times; the (positions, colour) class with at
 * least t members, smallest colour first and then smallest position set,
 * yields its first t rows. Guaranteed for dims >= (t*k*C(n*k,n), k*n).
 */
std::optional<MonoRect> mono_subgrid_2d(const GridColoring& col, std::size_t t, std::size_t n);

struct MonoSubgrid {
  Subgrid subgrid;
  Color color;
};

/// A monochromatic n x ... x n subgrid, by slicing along dimension 1 and
/// recursing on the slices.
std::optional<MonoSubgrid> mono_subgrid_d(const GridColoring& col, std::size_t n);

struct MonoClique {
  std::vector<std::size_t> vertices;
  Color color;
};

/// Monochromatic K_n via greedy neighbourhood refinement. Colours c with
/// usable[c] false are treated as missing edges. Requires n >= 2.
std::optional<MonoClique> mono_clique(const EdgeColoring& ec, std::size_t n,
                                      const std::vector<bool>& usable = {});

}  // namespace gridlex
