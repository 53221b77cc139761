#include "gridlex/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gridlex {

namespace {

std::vector<std::size_t> make_strides(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t s = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    strides[k] = s;
    s *= dims[k];
  }
  return strides;
}

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

// Visits every offset of `sub` inside an array with the given strides, in
// layout order of the subgrid (first dimension fastest).
template <typename F>
void for_each_offset(const Subgrid& sub, const std::vector<std::size_t>& strides, F&& f) {
  const std::size_t d = sub.ndim();
  std::vector<std::size_t> pos(d, 0);
  std::size_t off = 0;
  for (std::size_t k = 0; k < d; ++k) off += (sub.indices[k][0] - 1) * strides[k];
  while (true) {
    f(off);
    std::size_t k = 0;
    for (; k < d; ++k) {
      const auto& idx = sub.indices[k];
      off -= (idx[pos[k]] - 1) * strides[k];
      if (++pos[k] < idx.size()) {
        off += (idx[pos[k]] - 1) * strides[k];
        break;
      }
      pos[k] = 0;
      off += (idx[0] - 1) * strides[k];
    }
    if (k == d) return;
  }
}

}  // namespace

RankArray::RankArray(Dims dims, std::vector<Rank> ranks)
    : dims_(std::move(dims)), strides_(make_strides(dims_)), ranks_(std::move(ranks)) {
  if (dims_.empty()) throw InvalidArray("array must have at least one dimension");
  for (auto n : dims_)
    if (n == 0) throw InvalidArray("every dimension must have positive size");
  if (ranks_.size() != product(dims_))
    throw InvalidArray("rank count " + std::to_string(ranks_.size()) +
                       " does not match dims product " + std::to_string(product(dims_)));
  std::vector<bool> seen(ranks_.size(), false);
  for (auto r : ranks_) {
    if (r >= ranks_.size() || seen[r])
      throw InvalidArray("ranks are not a permutation of 0..size-1");
    seen[r] = true;
  }
}

RankArray RankArray::from_values(Dims dims, std::span<const std::int64_t> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<Rank> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]])
      throw InvalidArray("values must be distinct");
    ranks[order[r]] = static_cast<Rank>(r);
  }
  return RankArray(std::move(dims), std::move(ranks));
}

RankArray RankArray::layout_order(Dims dims) {
  std::vector<Rank> ranks(product(dims));
  std::iota(ranks.begin(), ranks.end(), Rank{0});
  return RankArray(std::move(dims), std::move(ranks));
}

std::size_t RankArray::offset(const Coord& x) const {
  if (x.size() != dims_.size()) throw std::out_of_range("coordinate has wrong dimension");
  std::size_t off = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 1 || x[k] > dims_[k]) throw std::out_of_range("coordinate outside the grid");
    off += (x[k] - 1) * strides_[k];
  }
  return off;
}

Coord RankArray::coord_of(std::size_t offset) const {
  Coord x(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    x[k] = offset % dims_[k] + 1;
    offset /= dims_[k];
  }
  return x;
}

Subgrid Subgrid::full(const Dims& dims) {
  Subgrid s;
  for (auto n : dims) {
    std::vector<Index> idx(n);
    std::iota(idx.begin(), idx.end(), Index{1});
    s.indices.push_back(std::move(idx));
  }
  return s;
}

Dims Subgrid::shape() const {
  Dims out;
  for (const auto& idx : indices) out.push_back(idx.size());
  return out;
}

void Subgrid::validate(const Dims& dims) const {
  if (indices.size() != dims.size()) throw InvalidSubgrid("subgrid dimension does not match array");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto& idx = indices[k];
    if (idx.empty()) throw InvalidSubgrid("empty index list in dimension " + std::to_string(k + 1));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] < 1 || idx[j] > dims[k])
        throw InvalidSubgrid("index out of bounds in dimension " + std::to_string(k + 1));
      if (j > 0 && idx[j] <= idx[j - 1])
        throw InvalidSubgrid("indices not strictly increasing in dimension " + std::to_string(k + 1));
    }
  }
}

void LexType::validate() const {
  const std::size_t d = sigma.size();
  if (signs.size() != d) throw std::invalid_argument("sigma and signs differ in length");
  std::vector<bool> seen(d + 1, false);
  for (int v : sigma) {
    if (v < 1 || static_cast<std::size_t>(v) > d || seen[v])
      throw std::invalid_argument("sigma is not a permutation of 1..d");
    seen[v] = true;
  }
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

LexType LexType::plain(std::vector<int> sigma) {
  LexType lt{std::move(sigma), {}};
  lt.signs.assign(lt.sigma.size(), 1);
  return lt;
}

std::vector<LexType> plain_lex_types(std::size_t d) {
  std::vector<int> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<LexType> out;
  do {
    out.push_back(LexType::plain(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<LexType> all_lex_types(std::size_t d) {
  std::vector<LexType> out;
  for (auto& base : plain_lex_types(d)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      LexType lt = base;
      for (std::size_t k = 0; k < d; ++k)
        if (mask & (std::size_t{1} << (d - 1 - k))) lt.signs[k] = -1;
      out.push_back(std::move(lt));
    }
  }
  return out;
}

std::string to_string(const LexType& lt) {
  std::ostringstream os;
  os << "sigma=(";
  for (std::size_t k = 0; k < lt.sigma.size(); ++k) os << (k ? "," : "") << lt.sigma[k];
  os << ") signs=(";
  for (std::size_t k = 0; k < lt.signs.size(); ++k) os << (k ? "," : "") << (lt.signs[k] > 0 ? '+' : '-');
  os << ")";
  return os.str();
}

std::string to_string(const MonotonicityPattern& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.signs.size(); ++k) {
    if (k) out += ",";
    out += p.signs[k] > 0 ? "+1" : "-1";
  }
  return out + ")";
}

RankArray restrict(const RankArray& array, const Subgrid& sub) {
  sub.validate(array.dims());
  std::vector<std::size_t> strides(array.ndim());
  for (std::size_t k = 0; k < array.ndim(); ++k) strides[k] = array.stride(k);
  std::vector<Rank> picked;
  picked.reserve(product(sub.shape()));
  for_each_offset(sub, strides, [&](std::size_t off) { picked.push_back(array[off]); });
  std::vector<std::size_t> order(picked.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return picked[a] < picked[b]; });
  std::vector<Rank> ranks(picked.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<Rank>(r);
  return RankArray(sub.shape(), std::move(ranks));
}

RankArray slice(const RankArray& array, std::size_t dim, Index index) {
  if (dim < 1 || dim > array.ndim()) throw std::out_of_range("slice dimension out of range");
  Subgrid sub = Subgrid::full(array.dims());
  sub.indices[dim - 1] = {index};
  RankArray r = restrict(array, sub);
  if (array.ndim() == 1) return r;
  Dims dims = array.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(dim - 1));
  return RankArray(std::move(dims), std::vector<Rank>(r.ranks().begin(), r.ranks().end()));
}

std::optional<std::pair<Coord, std::size_t>> find_decreasing_step(const RankArray& array) {
  const auto& dims = array.dims();
  for (std::size_t off = 0; off < array.size(); ++off) {
    std::size_t rest = off;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t xk = rest % dims[k];
      rest /= dims[k];
      if (xk + 1 < dims[k] && array[off + array.stride(k)] < array[off])
        return std::pair{array.coord_of(off), k + 1};
    }
  }
  return std::nullopt;
}

bool is_increasing(const RankArray& array) { return !find_decreasing_step(array).has_value(); }

std::optional<MonotonicityPattern> monotone_pattern(const RankArray& array) {
  const auto& dims = array.dims();
  MonotonicityPattern p{std::vector<int>(dims.size(), 0)};
  for (std::size_t off = 0; off < array.size(); ++off) {
    std::size_t rest = off;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t xk = rest % dims[k];
      rest /= dims[k];
      if (xk + 1 >= dims[k]) continue;
      const int s = array[off + array.stride(k)] > array[off] ? 1 : -1;
      if (p.signs[k] == 0)
        p.signs[k] = s;
      else if (p.signs[k] != s)
        return std::nullopt;
    }
  }
  for (auto& s : p.signs)
    if (s == 0) s = 1;
  return p;
}

namespace {

// Direction of the line through `off` along dimension k (0-based), or 0 if
// that line is not strictly monotone. Size-1 lines report +1.
int line_direction(const RankArray& array, std::size_t off, std::size_t k) {
  const std::size_t n = array.extent(k);
  const std::size_t st = array.stride(k);
  const std::size_t start = off - ((off / st) % n) * st;
  int dir = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const int s = array[start + (j + 1) * st] > array[start + j * st] ? 1 : -1;
    if (dir == 0)
      dir = s;
    else if (dir != s)
      return 0;
  }
  return dir == 0 ? 1 : dir;
}

}  // namespace

bool is_inconsistently_monotone(const RankArray& array) {
  for (std::size_t k = 0; k < array.ndim(); ++k) {
    const std::size_t st = array.stride(k);
    const std::size_t n = array.extent(k);
    for (std::size_t off = 0; off < array.size(); ++off) {
      if ((off / st) % n != 0) continue;  // one visit per line
      if (line_direction(array, off, k) == 0) return false;
    }
  }
  return true;
}

MonotonicityPattern pattern_at(const RankArray& array, const Coord& point) {
  const std::size_t off = array.offset(point);
  MonotonicityPattern p;
  for (std::size_t k = 0; k < array.ndim(); ++k) {
    const int dir = line_direction(array, off, k);
    if (dir == 0)
      throw NotApplicable("line along dimension " + std::to_string(k + 1) +
                          " through the point is not monotone");
    p.signs.push_back(dir);
  }
  return p;
}

std::size_t lex_position(const Dims& dims, const LexType& lt, std::size_t offset) {
  const std::size_t d = dims.size();
  std::vector<std::size_t> x(d);
  for (std::size_t k = 0; k < d; ++k) {
    x[k] = offset % dims[k];
    offset /= dims[k];
  }
  std::size_t key = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t k = static_cast<std::size_t>(lt.sigma[j] - 1);
    const std::size_t digit = lt.signs[k] > 0 ? x[k] : dims[k] - 1 - x[k];
    key = key * dims[k] + digit;
  }
  return key;
}

bool lex_type_check(const RankArray& array, const LexType& lt) {
  lt.validate();
  if (lt.ndim() != array.ndim()) throw std::invalid_argument("lex type dimension mismatch");
  for (std::size_t off = 0; off < array.size(); ++off)
    if (array[off] != lex_position(array.dims(), lt, off)) return false;
  return true;
}

std::optional<LexType> detect_lex_type(const RankArray& array) {
  auto pattern = monotone_pattern(array);
  if (!pattern) return std::nullopt;
  for (auto lt : plain_lex_types(array.ndim())) {
    lt.signs = pattern->signs;
    if (lex_type_check(array, lt)) return lt;
  }
  return std::nullopt;
}

Index Normalized::to_source(std::size_t dim, Index index) const {
  if (reflected.signs.at(dim - 1) > 0) return index;
  return array.extent(dim - 1) + 1 - index;
}

Subgrid Normalized::to_source(const Subgrid& sub) const {
  Subgrid out = sub;
  for (std::size_t k = 0; k < out.ndim(); ++k) {
    for (auto& x : out.indices[k]) x = to_source(k + 1, x);
    std::sort(out.indices[k].begin(), out.indices[k].end());
  }
  return out;
}

Normalized normalize_to_increasing(const RankArray& array, const MonotonicityPattern& pattern) {
  if (pattern.signs.size() != array.ndim())
    throw PreconditionError("pattern dimension does not match array");
  auto actual = monotone_pattern(array);
  if (!actual) throw PreconditionError("array is not monotone");
  for (std::size_t k = 0; k < array.ndim(); ++k)
    if (array.extent(k) > 1 && actual->signs[k] != pattern.signs[k])
      throw PreconditionError("array does not have the given monotonicity pattern");
  std::vector<Rank> ranks(array.size());
  for (std::size_t off = 0; off < array.size(); ++off) {
    Coord x = array.coord_of(off);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (pattern.signs[k] < 0) x[k] = array.extent(k) + 1 - x[k];
    ranks[array.offset(x)] = array[off];
  }
  return Normalized{RankArray(array.dims(), std::move(ranks)), pattern};
}

Subgrid compose(const Subgrid& outer, const Subgrid& inner) {
  if (outer.ndim() != inner.ndim()) throw InvalidSubgrid("subgrid dimensions differ");
  Subgrid out;
  for (std::size_t k = 0; k < outer.ndim(); ++k) {
    std::vector<Index> idx;
    for (auto j : inner.indices[k]) {
      if (j < 1 || j > outer.indices[k].size()) throw InvalidSubgrid("inner index out of range");
      idx.push_back(outer.indices[k][j - 1]);
    }
    out.indices.push_back(std::move(idx));
  }
  return out;
}

}  // namespace gridlex
