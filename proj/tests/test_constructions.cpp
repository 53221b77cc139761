#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gridlex/constructions.hpp"
#include "support.hpp"

using namespace gridlex;

namespace {

std::vector<Index> range(Index lo, Index hi) {
  std::vector<Index> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Any a x b subarray of the given type, by plain enumeration.
bool has_lex(const RankArray& a, std::size_t r, std::size_t c, const LexType& lt) {
  if (r > a.extent(0) || c > a.extent(1)) return false;
  for (const auto& rows : ref::subsets(a.extent(0), r))
    for (const auto& cols : ref::subsets(a.extent(1), c))
      if (ref::is_lex(restrict(a, Subgrid{{rows, cols}}), lt)) return true;
  return false;
}

}  // namespace

TEST_CASE("gen_lex") {
  auto a = gen_lex({3, 3}, LexType::plain({1, 2}));
  CHECK(std::vector<Rank>(a.ranks().begin(), a.ranks().end()) ==
        std::vector<Rank>{0, 3, 6, 1, 4, 7, 2, 5, 8});
  auto b = gen_lex({3, 3}, LexType::plain({2, 1}));
  CHECK(b == RankArray::layout_order({3, 3}));
  for (std::size_t d = 1; d <= 3; ++d)
    for (const auto& lt : all_lex_types(d)) {
      Dims dims;
      for (std::size_t k = 0; k < d; ++k) dims.push_back(2 + k);
      CHECK(ref::is_lex(gen_lex(dims, lt), lt));
    }
  CHECK_THROWS(gen_lex({3, 3}, LexType{{1, 1}, {1, 1}}));
}

TEST_CASE("block g and h") {
  CHECK(gen_block_g(3) == RankArray::layout_order({2, 4}));
  auto h3 = gen_block_h(3);
  CHECK(h3.dims() == Dims{4, 2});
  CHECK(ref::is_lex(h3, LexType::plain({1, 2})));

  for (std::size_t n = 3; n <= 5; ++n) {
    auto g = gen_block_g(n);
    auto h = gen_block_h(n);
    CHECK(g.dims() == Dims{(n - 1) * (n - 2), (n - 1) * (n - 1)});
    CHECK(h.dims() == Dims{(n - 1) * (n - 1), (n - 1) * (n - 2)});
    CHECK(ref::increasing(g));
    CHECK(ref::increasing(h));
    CHECK_FALSE(has_lex(g, n - 1, 2, LexType::plain({1, 2})));
    CHECK_FALSE(has_lex(g, n, 2, LexType::plain({2, 1})));
    CHECK_FALSE(has_lex(h, 2, n, LexType::plain({1, 2})));
    CHECK_FALSE(has_lex(h, 2, n - 1, LexType::plain({2, 1})));
    // one size smaller is present, so the shapes are tight
    CHECK(has_lex(g, n - 2, 2, LexType::plain({1, 2})));
    CHECK(has_lex(h, 2, n - 1, LexType::plain({1, 2})));
  }
  CHECK_THROWS(gen_block_g(2));
  CHECK_THROWS(gen_block_h(2));
}

TEST_CASE("f2 layout regions") {
  F2Layout l3(3);
  CHECK(l3.size == 6);
  std::vector<std::size_t> count(6, 0);
  for (Index x2 = 1; x2 <= 6; ++x2)
    for (Index x1 = 1; x1 <= 6; ++x1) ++count.at(static_cast<std::size_t>(l3.region(x1, x2)));
  CHECK(count == std::vector<std::size_t>{0, 8, 8, 4, 8, 8});

  for (std::size_t n = 3; n <= 8; ++n) {
    F2Layout l(n);
    CHECK(l.size == 2 * n * n - 5 * n + 3);
    CHECK(l.i_end == (n - 1) * (n - 2));
    CHECK(l.j_end == (n - 1) * (n - 1));
    auto f = gen_f2_lower(n);
    CHECK(f.dims() == Dims{l.size, l.size});
    // every value of region r lies below every value of region r+1
    std::vector<Rank> lo(6, ~Rank{0}), hi(6, 0);
    for (Index x2 = 1; x2 <= l.size; ++x2)
      for (Index x1 = 1; x1 <= l.size; ++x1) {
        const auto r = static_cast<std::size_t>(l.region(x1, x2));
        REQUIRE(r >= 1);
        REQUIRE(r <= 5);
        lo[r] = std::min(lo[r], f.at(x1, x2));
        hi[r] = std::max(hi[r], f.at(x1, x2));
      }
    for (std::size_t r = 1; r < 5; ++r) CHECK(hi[r] < lo[r + 1]);

    const auto I = range(1, l.i_end), J = range(l.i_end + 1, l.j_end), K = range(l.j_end + 1, l.size);
    auto cat = [](std::vector<Index> a, const std::vector<Index>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    const auto g = gen_block_g(n), h = gen_block_h(n);
    CHECK(restrict(f, Subgrid{{I, cat(I, J)}}) == g);
    CHECK(restrict(f, Subgrid{{cat(J, K), I}}) == h);
    CHECK(restrict(f, Subgrid{{cat(I, J), K}}) == h);
    CHECK(restrict(f, Subgrid{{K, cat(J, K)}}) == g);
    CHECK(ref::is_lex(restrict(f, Subgrid{{J, J}}), LexType::plain({1, 2})));
  }
}

TEST_CASE("f2 lower array") {
  for (std::size_t n = 3; n <= 5; ++n) CHECK(ref::increasing(gen_f2_lower(n)));
  auto f = gen_f2_lower(3);
  CHECK_FALSE(has_lex(f, 3, 3, LexType::plain({1, 2})));
  CHECK_FALSE(has_lex(f, 3, 3, LexType::plain({2, 1})));
  CHECK(has_lex(f, 2, 2, LexType::plain({1, 2})));
  CHECK_THROWS(gen_f2_lower(2));
}

TEST_CASE("random generators") {
  CHECK(gen_random({2, 2}, 7) == gen_random({2, 2}, 7));
  CHECK(gen_random({5, 5}, 1) != gen_random({5, 5}, 2));
  CHECK(gen_random_increasing({4, 4}, 3) == gen_random_increasing({4, 4}, 3));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Dims dims{1 + seed % 4, 1 + (seed / 4) % 4, 1 + seed % 3};
    CHECK(ref::increasing(gen_random_increasing(dims, seed)));
  }
  CHECK(gen_random_increasing({1, 7, 1}, 5) == RankArray::layout_order({1, 7, 1}));
  // every permutation of 3 elements shows up
  std::vector<std::vector<Rank>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto a = gen_random({3}, seed);
    seen.emplace_back(a.ranks().begin(), a.ranks().end());
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CHECK(seen.size() == 6);
}
