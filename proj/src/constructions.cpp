#include "gridlex/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "gridlex/random.hpp"

namespace gridlex {

namespace {

void require_n3(std::size_t n) {
  if (n < 3) throw std::invalid_argument("construction needs n >= 3");
}

std::size_t product(const Dims& dims) {
  std::size_t p = 1;
  for (auto s : dims) p *= s;
  return p;
}

// Value of the g block at a 1-based cell.
std::size_t g_value(std::size_t n, Index x1, Index x2) {
  const std::size_t w = n - 1;
  const std::size_t strip = (x1 - 1) / w;
  return strip * w * w * w + (x2 - 1) * w + (x1 - 1 - strip * w);
}

std::size_t h_value(std::size_t n, Index x1, Index x2) {
  const std::size_t w = n - 1;
  const std::size_t band = (x2 - 1) / w;
  return band * w * w * w + (x1 - 1) * w + (x2 - 1 - band * w);
}

}  // namespace

RankArray gen_lex(const Dims& dims, const LexType& lt) {
  lt.validate();
  if (lt.ndim() != dims.size()) throw std::invalid_argument("lex type does not match dims");
  std::vector<Rank> ranks(product(dims));
  for (std::size_t off = 0; off < ranks.size(); ++off)
    ranks[off] = static_cast<Rank>(lex_position(dims, lt, off));
  return RankArray(dims, std::move(ranks));
}

RankArray gen_block_g(std::size_t n) {
  require_n3(n);
  const Dims dims{(n - 1) * (n - 2), (n - 1) * (n - 1)};
  std::vector<Rank> ranks(product(dims));
  for (Index x2 = 1; x2 <= dims[1]; ++x2)
    for (Index x1 = 1; x1 <= dims[0]; ++x1)
      ranks[(x1 - 1) + (x2 - 1) * dims[0]] = static_cast<Rank>(g_value(n, x1, x2));
  return RankArray(dims, std::move(ranks));
}

RankArray gen_block_h(std::size_t n) {
  require_n3(n);
  const Dims dims{(n - 1) * (n - 1), (n - 1) * (n - 2)};
  std::vector<Rank> ranks(product(dims));
  for (Index x2 = 1; x2 <= dims[1]; ++x2)
    for (Index x1 = 1; x1 <= dims[0]; ++x1)
      ranks[(x1 - 1) + (x2 - 1) * dims[0]] = static_cast<Rank>(h_value(n, x1, x2));
  return RankArray(dims, std::move(ranks));
}

F2Layout::F2Layout(std::size_t n_) : n(n_) {
  require_n3(n);
  size = 2 * n * n - 5 * n + 3;
  i_end = (n - 1) * (n - 2);
  j_end = (n - 1) * (n - 1);
}

int F2Layout::region(Index x1, Index x2) const {
  if (x1 < 1 || x2 < 1 || x1 > size || x2 > size) throw std::out_of_range("cell outside the array");
  auto part = [&](Index x) { return x <= i_end ? 0 : x <= j_end ? 1 : 2; };
  const int p1 = part(x1), p2 = part(x2);
  if (p1 == 0) return p2 == 2 ? 4 : 1;
  if (p1 == 1) return p2 == 0 ? 2 : p2 == 1 ? 3 : 4;
  return p2 == 0 ? 2 : 5;
}

RankArray gen_f2_lower(std::size_t n) {
  const F2Layout lay(n);
  const std::size_t big = (n - 1) * (n - 1) * (n - 1) * (n - 2);  // cells in a g or h copy
  const std::size_t mid = (n - 1) * (n - 1);
  const std::size_t base[6] = {0, 0, big, 2 * big, 2 * big + mid, 3 * big + mid};
  const Dims dims{lay.size, lay.size};
  std::vector<Rank> ranks(lay.size * lay.size);
  for (Index x2 = 1; x2 <= lay.size; ++x2) {
    for (Index x1 = 1; x1 <= lay.size; ++x1) {
      const int r = lay.region(x1, x2);
      std::size_t v = 0;
      switch (r) {
        case 1: v = g_value(n, x1, x2); break;
        case 2: v = h_value(n, x1 - lay.i_end, x2); break;
        case 3: v = (x1 - lay.i_end - 1) * (n - 1) + (x2 - lay.i_end - 1); break;
        case 4: v = h_value(n, x1, x2 - lay.j_end); break;
        default: v = g_value(n, x1 - lay.j_end, x2 - lay.i_end); break;
      }
      ranks[(x1 - 1) + (x2 - 1) * lay.size] = static_cast<Rank>(base[r] + v);
    }
  }
  return RankArray(dims, std::move(ranks));
}

RankArray gen_random(const Dims& dims, std::uint64_t seed) {
  std::vector<Rank> ranks(product(dims));
  std::iota(ranks.begin(), ranks.end(), Rank{0});
  Rng rng(seed);
  rng.shuffle(ranks);
  return RankArray(dims, std::move(ranks));
}

RankArray gen_random_increasing(const Dims& dims, std::uint64_t seed) {
  const std::size_t total = product(dims);
  if (dims.empty() || total == 0) throw InvalidArray("dims must be nonempty and positive");
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t k = 1; k < dims.size(); ++k) stride[k] = stride[k - 1] * dims[k - 1];
  auto coord = [&](std::size_t off, std::size_t k) { return (off / stride[k]) % dims[k]; };
  std::vector<std::size_t> waiting(total, 0);
  for (std::size_t off = 0; off < total; ++off)
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (coord(off, k) > 0) ++waiting[off];
  std::vector<std::size_t> ready{0};
  std::vector<Rank> ranks(total);
  Rng rng(seed);
  for (Rank r = 0; r < total; ++r) {
    const std::size_t pick = rng.uniform_index(ready.size());
    const std::size_t off = ready[pick];
    ready[pick] = ready.back();
    ready.pop_back();
    ranks[off] = r;
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (coord(off, k) + 1 < dims[k] && --waiting[off + stride[k]] == 0) ready.push_back(off + stride[k]);
  }
  return RankArray(dims, std::move(ranks));
}

}  // namespace gridlex
