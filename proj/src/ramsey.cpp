#include "gridlex/ramsey.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gridlex {

void GridColoring::validate() const {
  if (dims.empty()) throw std::invalid_argument("colouring needs at least one dimension");
  std::size_t total = 1;
  for (auto n : dims) {
    if (n == 0) throw std::invalid_argument("colouring dimension of size 0");
    total *= n;
  }
  if (colors.size() != total) throw std::invalid_argument("colour count does not match dims");
  if (k == 0) throw std::invalid_argument("need at least one colour");
  for (auto c : colors)
    if (c >= k) throw std::invalid_argument("colour id out of range");
}

EdgeColoring::EdgeColoring(std::size_t n_vertices, Color k, Color fill)
    : n_(n_vertices), k_(k), colors_(n_vertices * (n_vertices > 0 ? n_vertices - 1 : 0) / 2, fill) {
  if (k == 0 || fill >= k) throw std::invalid_argument("invalid edge colouring");
}

std::size_t EdgeColoring::pair_index(std::size_t u, std::size_t v) const {
  if (u == v || u < 1 || v < 1 || u > n_ || v > n_) throw std::out_of_range("bad vertex pair");
  if (u > v) std::swap(u, v);
  // pairs (1,2),(1,3),(2,3),(1,4),... ordered by larger endpoint
  return (v - 1) * (v - 2) / 2 + (u - 1);
}

void EdgeColoring::set(std::size_t u, std::size_t v, Color c) {
  if (c >= k_) throw std::invalid_argument("edge colour out of range");
  colors_[pair_index(u, v)] = c;
}

std::optional<MonoRect> mono_subgrid_2d(const GridColoring& col, std::size_t t, std::size_t n) {
  col.validate();
  if (col.dims.size() != 2) throw std::invalid_argument("mono_subgrid_2d needs a 2-D colouring");
  if (t == 0 || n == 0) throw std::invalid_argument("t and n must be positive");
  const std::size_t rows = col.dims[0], cols = col.dims[1];
  std::map<std::pair<Color, std::vector<Index>>, std::vector<Index>> classes;
  std::vector<std::vector<Index>> by_color(col.k);
  for (Index r = 1; r <= rows; ++r) {
    for (auto& v : by_color) v.clear();
    for (Index c = 1; c <= cols; ++c) by_color[col.at(r, c)].push_back(c);
    for (Color c = 0; c < col.k; ++c) {
      if (by_color[c].size() < n) continue;
      std::vector<Index> pos(by_color[c].begin(), by_color[c].begin() + static_cast<std::ptrdiff_t>(n));
      classes[{c, std::move(pos)}].push_back(r);
      break;
    }
  }
  for (auto& [key, members] : classes) {
    if (members.size() < t) continue;
    members.resize(t);
    return MonoRect{members, key.second, key.first};
  }
  return std::nullopt;
}

namespace {

GridColoring slice_first(const GridColoring& col, Index i) {
  GridColoring out;
  out.dims.assign(col.dims.begin() + 1, col.dims.end());
  out.k = col.k;
  for (std::size_t rest = 0; rest * col.dims[0] < col.colors.size(); ++rest)
    out.colors.push_back(col.colors[(i - 1) + rest * col.dims[0]]);
  return out;
}

}  // namespace

std::optional<MonoSubgrid> mono_subgrid_d(const GridColoring& col, std::size_t n) {
  col.validate();
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (col.dims.size() == 1) {
    for (Color c = 0; c < col.k; ++c) {
      std::vector<Index> idx;
      for (Index i = 1; i <= col.dims[0] && idx.size() < n; ++i)
        if (col.colors[i - 1] == c) idx.push_back(i);
      if (idx.size() == n) return MonoSubgrid{Subgrid{{idx}}, c};
    }
    return std::nullopt;
  }
  if (col.dims.size() == 2) {
    auto r = mono_subgrid_2d(col, n, n);
    if (!r) return std::nullopt;
    return MonoSubgrid{Subgrid{{r->rows, r->cols}}, r->color};
  }
  std::map<std::pair<Color, Subgrid>, std::vector<Index>> classes;
  for (Index i = 1; i <= col.dims[0]; ++i) {
    auto r = mono_subgrid_d(slice_first(col, i), n);
    if (r) classes[{r->color, r->subgrid}].push_back(i);
  }
  for (auto& [key, members] : classes) {
    if (members.size() < n) continue;
    members.resize(n);
    Subgrid s;
    s.indices.push_back(members);
    for (const auto& idx : key.second.indices) s.indices.push_back(idx);
    return MonoSubgrid{std::move(s), key.first};
  }
  return std::nullopt;
}

std::optional<MonoClique> mono_clique(const EdgeColoring& ec, std::size_t n,
                                      const std::vector<bool>& usable) {
  if (n < 2) throw std::invalid_argument("mono_clique needs n >= 2");
  auto ok = [&](Color c) { return usable.empty() || (c < usable.size() && usable[c]); };
  // sequence of chosen vertices with the colour kept at each step
  std::vector<std::size_t> seq;
  std::vector<std::optional<Color>> kept;
  std::vector<std::size_t> cand(ec.n_vertices());
  std::iota(cand.begin(), cand.end(), std::size_t{1});
  std::vector<std::vector<std::size_t>> parts(ec.k());
  while (!cand.empty()) {
    const std::size_t v = cand.front();
    for (auto& p : parts) p.clear();
    for (std::size_t j = 1; j < cand.size(); ++j) {
      const Color c = ec.color(v, cand[j]);
      if (ok(c)) parts[c].push_back(cand[j]);
    }
    seq.push_back(v);
    std::size_t best = 0;
    for (Color c = 1; c < ec.k(); ++c)
      if (parts[c].size() > parts[best].size()) best = c;
    if (parts[best].empty()) {
      kept.push_back(std::nullopt);
      break;
    }
    kept.push_back(static_cast<Color>(best));
    cand = std::move(parts[best]);
    parts[best] = {};
  }
  std::vector<std::size_t> count(ec.k(), 0);
  for (const auto& c : kept)
    if (c) ++count[*c];
  std::size_t best = 0;
  for (Color c = 1; c < ec.k(); ++c)
    if (count[c] > count[best]) best = c;
  if (count[best] < n - 1) return std::nullopt;
  MonoClique out{{}, static_cast<Color>(best)};
  std::size_t j = 0;
  for (; j < seq.size() && out.vertices.size() < n - 1; ++j)
    if (kept[j] == static_cast<Color>(best)) out.vertices.push_back(seq[j]);
  out.vertices.push_back(seq[j]);
  return out;
}

}  // namespace gridlex
