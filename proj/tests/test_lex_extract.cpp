#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gridlex/constructions.hpp"
#include "gridlex/lex_extract.hpp"
#include "gridlex/oracle.hpp"
#include "support.hpp"

using namespace gridlex;

namespace {

void check_lex(const RankArray& a, const ExtractionResult& r, std::size_t n) {
  REQUIRE(r.found());
  r.subgrid->validate(a.dims());
  CHECK(r.subgrid->shape() == Dims(a.ndim(), n));
  REQUIRE(r.lex_type.has_value());
  CHECK(ref::is_lex(restrict(a, *r.subgrid), *r.lex_type));
}

// Stack property from its definition: every cell of a lower layer is below
// every cell of a higher one.
bool stack_ok(const RankArray& a, const StackDecomposition& sd) {
  std::vector<Rank> lo, hi;
  for (std::size_t j = 0; j < sd.heights.size(); ++j) {
    const auto sub = sd.layer(j);
    sub.validate(a.dims());
    Rank mn = ~Rank{0}, mx = 0;
    for (const auto& x : ref::cells(restrict(a, sub))) {
      Coord host(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) host[k] = sub.indices[k][x[k] - 1];
      mn = std::min(mn, a.at(host));
      mx = std::max(mx, a.at(host));
    }
    lo.push_back(mn);
    hi.push_back(mx);
  }
  for (std::size_t j = 0; j + 1 < lo.size(); ++j)
    if (hi[j] >= lo[j + 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("fg_extract_lex_2d") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto a = gen_random_increasing({2, 2}, seed);
    auto r = fg_extract_lex_2d(a, 2);
    check_lex(a, r, 2);
    CHECK(*r.subgrid == Subgrid::full({2, 2}));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto a = gen_random_increasing({7, 7}, seed);
    auto r = fg_extract_lex_2d(a, 3);
    check_lex(a, r, 3);
    CHECK(r.lex_type->signs == std::vector<int>{1, 1});
  }
  auto f = gen_f2_lower(3);
  auto r = fg_extract_lex_2d(f, 3);
  CHECK_FALSE(r.found());
  CHECK(r.stage == "anchor-colouring");
  CHECK_THROWS_AS(fg_extract_lex_2d(gen_random({4, 4}, 3), 2), PreconditionError);
}

TEST_CASE("fg failure agrees with the exhaustive oracle") {
  const auto types = plain_lex_types(2);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t s1 = 3 + seed % 4, s2 = 3 + (seed / 4) % 4;
    auto a = gen_random_increasing({s1, s2}, seed);
    auto r = fg_extract_lex_2d(a, 3);
    auto w = brute_lex_subgrid(a, {3, 3}, types);
    CHECK(r.found() == w.has_value());
    if (r.found()) check_lex(a, r, 3);
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    auto f = gen_f2_lower(n);
    CHECK_FALSE(fg_extract_lex_2d(f, n).found());
    check_lex(f, fg_extract_lex_2d(f, n - 1), n - 1);
  }
}

TEST_CASE("dominant_coordinate") {
  auto rows = gen_lex({16, 16}, LexType::plain({2, 1}));
  auto sd = dominant_coordinate(rows, 2, 2);
  REQUIRE(sd);
  CHECK(sd->dim == 2);
  CHECK(sd->bases == std::vector<std::vector<Index>>{{2, 3, 4}});
  CHECK(sd->heights == std::vector<Index>{2, 6});
  CHECK(stack_ok(rows, *sd));
  CHECK(check_stack(rows, *sd));

  auto cols = gen_lex({16, 16}, LexType::plain({1, 2}));
  sd = dominant_coordinate(cols, 2, 2);
  REQUIRE(sd);
  CHECK(sd->dim == 1);
  CHECK(sd->bases == std::vector<std::vector<Index>>{{2, 3, 4}});
  CHECK(sd->heights == std::vector<Index>{2, 6});
  CHECK(stack_ok(cols, *sd));

  auto cube = RankArray::layout_order({36, 36, 36});
  sd = dominant_coordinate(cube, 2, 2);
  REQUIRE(sd);
  CHECK(sd->heights.size() == 2);
  CHECK(sd->bases.size() == 2);
  for (const auto& b : sd->bases) CHECK(b.size() == 3);
  CHECK(stack_ok(cube, *sd));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = gen_random_increasing({16, 16}, seed);
    auto s = dominant_coordinate(a, 2, 2);
    REQUIRE(s);
    CHECK(s->heights.size() == 2);
    CHECK(stack_ok(a, *s));
  }

  CHECK_THROWS_AS(dominant_coordinate(gen_random_increasing({15, 16}, 1), 2, 2), PreconditionError);
  CHECK_THROWS_AS(dominant_coordinate(gen_random({16, 16}, 1), 2, 2), PreconditionError);
  CHECK_THROWS_AS(dominant_coordinate(rows, 1, 2), PreconditionError);
}

TEST_CASE("check_stack rejects a broken stack") {
  auto a = gen_lex({4, 4}, LexType::plain({2, 1}));
  StackDecomposition good{2, {{1, 2}}, {1, 3}};
  CHECK(check_stack(a, good));
  CHECK(stack_ok(a, good));
  StackDecomposition bad{1, {{1, 2}}, {1, 3}};
  CHECK_FALSE(check_stack(a, bad));
  CHECK_FALSE(stack_ok(a, bad));
}

TEST_CASE("find_stack") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = gen_random_increasing({9, 9, 9}, seed);
    auto sd = find_stack(a, 3, 3);
    if (!sd) continue;
    CHECK(sd->heights.size() >= 3);
    for (const auto& b : sd->bases) CHECK(b.size() >= 3);
    CHECK(stack_ok(a, *sd));
  }
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto a = gen_random_increasing({54, 54, 54}, seed);
    auto sd = find_stack(a, 3, 3);
    REQUIRE(sd);
    CHECK(sd->heights.size() >= 3);
    for (const auto& b : sd->bases) CHECK(b.size() >= 3);
    CHECK(stack_ok(a, *sd));
  }
}

TEST_CASE("extract_lex_3d") {
  auto a = gen_lex({8, 8, 8}, LexType::plain({3, 1, 2}));
  auto r = extract_lex_3d(a, 2);
  check_lex(a, r, 2);
  CHECK(r.lex_type->sigma == std::vector<int>{3, 1, 2});

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto b = gen_random_increasing({12, 12, 12}, seed);
    r = extract_lex_3d(b, 2);
    if (r.found())
      check_lex(b, r, 2);
    else
      CHECK_FALSE(r.stage.empty());
  }
  r = extract_lex_3d(RankArray::layout_order({1, 5, 5}), 2);
  CHECK_FALSE(r.found());
}

TEST_CASE("extract_lex_d") {
  auto a = gen_lex({6, 6, 6, 6}, LexType::plain({4, 1, 2, 3}));
  auto r = extract_lex_d(a, 2);
  check_lex(a, r, 2);
  CHECK(r.lex_type->sigma.front() == 4);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto b = gen_random_increasing({10, 10, 10}, seed);
    auto x = extract_lex_d(b, 2);
    auto y = extract_lex_3d(b, 2);
    if (x.found()) check_lex(b, x, 2);
    if (y.found()) check_lex(b, y, 2);
  }
  r = extract_lex_d(RankArray::layout_order({1, 3, 3}), 2);
  CHECK_FALSE(r.found());
  CHECK(r.stage == "size");

  // ranks by number of coordinates equal to 2: no two layers stack
  RankArray levels({2, 2, 2}, {0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(ref::increasing(levels));
  CHECK_FALSE(find_stack(levels, 2, 2));
  r = extract_lex_d(levels, 2);
  CHECK_FALSE(r.found());
  CHECK(r.stage == "dominant-coordinate");
}

TEST_CASE("pipeline recovers every generated type") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& lt : all_lex_types(d)) {
      auto a = gen_lex(Dims(d, 4), lt);
      auto r = pipeline_lex_monotone(a, 2);
      check_lex(a, r, 2);
      CHECK(*r.lex_type == lt);
    }
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto b = gen_random({10, 10}, seed);
    auto r = pipeline_lex_monotone(b, 2);
    if (r.found())
      check_lex(b, r, 2);
    else
      CHECK_FALSE(r.stage.empty());
  }
}
