#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridlex/count.hpp"
#include "gridlex/random.hpp"
#include "gridlex/ramsey.hpp"

using namespace gridlex;

namespace {

GridColoring random_coloring(Dims dims, Color k, std::uint64_t seed) {
  Rng rng(seed);
  GridColoring col{dims, {}, k};
  std::size_t total = 1;
  for (auto s : dims) total *= s;
  for (std::size_t i = 0; i < total; ++i) col.colors.push_back(static_cast<Color>(rng.uniform_index(k)));
  return col;
}

bool rect_is_mono(const GridColoring& col, const MonoRect& r) {
  for (auto x : r.rows)
    for (auto y : r.cols)
      if (col.at(x, y) != r.color) return false;
  return true;
}

bool subgrid_is_mono(const GridColoring& col, const MonoSubgrid& m) {
  const std::size_t d = col.dims.size();
  std::vector<std::size_t> pos(d, 0);
  while (true) {
    std::size_t off = 0, stride = 1;
    for (std::size_t k = 0; k < d; ++k) {
      off += (m.subgrid.indices[k][pos[k]] - 1) * stride;
      stride *= col.dims[k];
    }
    if (col.colors[off] != m.color) return false;
    std::size_t k = 0;
    for (; k < d; ++k) {
      if (++pos[k] < m.subgrid.indices[k].size()) break;
      pos[k] = 0;
    }
    if (k == d) return true;
  }
}

EdgeColoring pentagon() {
  EdgeColoring ec(5, 2, 1);
  for (std::size_t v = 1; v <= 5; ++v) ec.set(v, v % 5 + 1, 0);
  return ec;
}

bool clique_is_mono(const EdgeColoring& ec, const MonoClique& c) {
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
      if (ec.color(c.vertices[i], c.vertices[j]) != c.color) return false;
  return true;
}

}  // namespace

TEST_CASE("mono_subgrid_2d examples") {
  GridColoring zero{{2, 2}, {0, 0, 0, 0}, 1};
  auto r = mono_subgrid_2d(zero, 2, 2);
  REQUIRE(r);
  CHECK(r->rows == std::vector<Index>{1, 2});
  CHECK(r->cols == std::vector<Index>{1, 2});
  CHECK(r->color == 0);

  GridColoring chess{{3, 3}, {}, 2};
  for (Index y = 1; y <= 3; ++y)
    for (Index x = 1; x <= 3; ++x) chess.colors.push_back(static_cast<Color>((x + y) % 2));
  auto c = mono_subgrid_2d(chess, 2, 2);
  REQUIRE(c);
  CHECK(c->rows == std::vector<Index>{1, 3});
  CHECK(c->cols == std::vector<Index>{1, 3});
  CHECK(c->color == 0);
}

TEST_CASE("mono_subgrid_2d at the guarantee size") {
  // t k C(nk, n) x k n with t = n = k = 2
  const std::size_t rows = static_cast<std::size_t>(2 * 2 * binomial(4, 2));
  CHECK(rows == 24);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto col = random_coloring({rows, 4}, 2, seed);
    auto r = mono_subgrid_2d(col, 2, 2);
    REQUIRE(r);
    CHECK(r->rows.size() == 2);
    CHECK(r->cols.size() == 2);
    CHECK(rect_is_mono(col, *r));
  }
  // one colour: every grid meeting t x n works, exhaustively over small sizes
  for (std::size_t t = 1; t <= 4; ++t)
    for (std::size_t n = 1; n <= 4; ++n) {
      GridColoring one{{t, n}, std::vector<Color>(t * n, 0), 1};
      CHECK(mono_subgrid_2d(one, t, n).has_value());
    }
}

TEST_CASE("mono_subgrid_2d reports absence without error") {
  GridColoring chess{{2, 2}, {0, 1, 1, 0}, 2};
  CHECK_FALSE(mono_subgrid_2d(chess, 2, 2));
}

TEST_CASE("mono_subgrid_d") {
  for (std::size_t d = 1; d <= 4; ++d) {
    Dims dims(d, 3);
    std::size_t total = 1;
    for (auto s : dims) total *= s;
    GridColoring one{dims, std::vector<Color>(total, 0), 1};
    auto r = mono_subgrid_d(one, 3);
    REQUIRE(r);
    CHECK(r->subgrid == Subgrid::full(dims));
  }
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto col = random_coloring({8, 4, 4}, 2, seed);
    auto r = mono_subgrid_d(col, 2);
    if (!r) continue;
    ++found;
    CHECK(r->subgrid.shape() == Dims{2, 2, 2});
    CHECK(subgrid_is_mono(col, *r));
  }
  CHECK(found > 0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto col = random_coloring({10, 4}, 2, seed);
    auto a = mono_subgrid_d(col, 2);
    auto b = mono_subgrid_2d(col, 2, 2);
    CHECK(a.has_value() == b.has_value());
    if (a) {
      CHECK(subgrid_is_mono(col, *a));
      CHECK(rect_is_mono(col, *b));
    }
  }
}

TEST_CASE("mono_clique") {
  EdgeColoring all0(5, 1, 0);
  auto r = mono_clique(all0, 3);
  REQUIRE(r);
  CHECK(r->vertices == std::vector<std::size_t>{1, 2, 3});
  CHECK(r->color == 0);

  const auto pent = pentagon();
  std::size_t triangles = 0;
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a + 1; b <= 5; ++b)
      for (std::size_t c = b + 1; c <= 5; ++c)
        if (pent.color(a, b) == pent.color(a, c) && pent.color(a, b) == pent.color(b, c)) ++triangles;
  CHECK(triangles == 0);
  CHECK_FALSE(mono_clique(pent, 3));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    EdgeColoring ec(64, 2);
    for (std::size_t u = 1; u <= 64; ++u)
      for (std::size_t v = u + 1; v <= 64; ++v) ec.set(u, v, static_cast<Color>(rng.uniform_index(2)));
    auto c = mono_clique(ec, 3);
    REQUIRE(c);
    CHECK(c->vertices.size() == 3);
    CHECK(clique_is_mono(ec, *c));
    CHECK(mono_clique(ec, 2).has_value());
  }
  CHECK_THROWS(mono_clique(pent, 1));
}

TEST_CASE("mono_clique respects unusable colours") {
  EdgeColoring ec(6, 2, 1);
  CHECK_FALSE(mono_clique(ec, 3, {true, false}));
  CHECK(mono_clique(ec, 3, {false, true}).has_value());
}

TEST_CASE("determinism") {
  auto col = random_coloring({24, 4}, 2, 99);
  auto a = mono_subgrid_2d(col, 2, 2);
  auto b = mono_subgrid_2d(col, 2, 2);
  REQUIRE(a);
  CHECK(a->rows == b->rows);
  CHECK(a->cols == b->cols);
  CHECK(a->color == b->color);
}
