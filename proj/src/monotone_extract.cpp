#include "gridlex/monotone_extract.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gridlex/ramsey.hpp"

namespace gridlex {

namespace {

// Lexicographically smallest longest subsequence with cmp(a[i], a[j]) between
// consecutive picks.
template <typename Cmp>
std::vector<Index> longest_chain(std::span<const Rank> a, Cmp cmp) {
  const std::size_t n = a.size();
  std::vector<std::size_t> len(n, 1);
  std::size_t best = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (cmp(a[i], a[j])) len[i] = std::max(len[i], len[j] + 1);
    best = std::max(best, len[i]);
  }
  std::vector<Index> out;
  std::size_t need = best;
  std::size_t from = 0;
  while (need > 0) {
    for (std::size_t j = from; j < n; ++j) {
      if (len[j] == need && (out.empty() || cmp(a[out.back() - 1], a[j]))) {
        out.push_back(j + 1);
        from = j + 1;
        break;
      }
    }
    --need;
  }
  return out;
}

std::vector<Index> first(const std::vector<Index>& v, std::size_t k) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(k, v.size()))};
}

std::vector<Index> pick(const std::vector<Index>& v, const std::vector<Index>& positions) {
  std::vector<Index> out;
  for (auto p : positions) out.push_back(v[p - 1]);
  return out;
}

bool fits(const RankArray& array, std::size_t n) {
  return std::all_of(array.dims().begin(), array.dims().end(), [&](auto s) { return s >= n; });
}

}  // namespace

MonotoneSubsequence es_monotone_subsequence(std::span<const Rank> seq) {
  auto inc = longest_chain(seq, [](Rank a, Rank b) { return a < b; });
  auto dec = longest_chain(seq, [](Rank a, Rank b) { return a > b; });
  if (dec.size() > inc.size()) return {std::move(dec), -1};
  return {std::move(inc), 1};
}

MonotoneSubsequence es_monotone_subsequence(const RankArray& seq) {
  if (seq.ndim() != 1) throw PreconditionError("expected a 1-dimensional array");
  return es_monotone_subsequence(seq.ranks());
}

ExtractionResult extract_monotone_2d(const RankArray& array, std::size_t n, std::size_t t) {
  if (array.ndim() != 2) throw PreconditionError("extract_monotone_2d needs a 2-dimensional array");
  if (n == 0 || t == 0) throw PreconditionError("n and t must be positive");
  const std::size_t n1 = array.extent(0), n2 = array.extent(1);
  if (n1 < n || n2 < t) return ExtractionResult::failure("size", {n1, n2});

  const std::size_t len = std::min(2 * n, n1);
  std::map<std::pair<std::vector<Index>, int>, std::vector<Index>> classes;
  std::vector<Rank> seq(n1);
  std::size_t longest = 0;
  for (Index c = 1; c <= n2; ++c) {
    for (Index r = 1; r <= n1; ++r) seq[r - 1] = array.at(r, c);
    auto es = es_monotone_subsequence(seq);
    longest = std::max(longest, es.indices.size());
    if (es.indices.size() < len) continue;
    classes[{first(es.indices, len), es.direction}].push_back(c);
  }
  if (classes.empty()) return ExtractionResult::failure("column-es", {longest});

  const std::pair<std::vector<Index>, int>* key = nullptr;
  const std::vector<Index>* members = nullptr;
  for (const auto& [k, v] : classes) {
    if (!members || v.size() > members->size() ||
        (v.size() == members->size() && k.second > key->second)) {
      key = &k;
      members = &v;
    }
  }
  const auto& rows = key->first;
  std::vector<Index> cols = *members;
  if (cols.size() < t) return ExtractionResult::failure("column-pigeonhole", {cols.size()});

  std::vector<int> row_dir;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    seq.resize(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) seq[j] = array.at(rows[i], cols[j]);
    auto es = es_monotone_subsequence(seq);
    cols = pick(cols, es.indices);
    row_dir.push_back(es.direction);
    if (cols.size() < t) return ExtractionResult::failure("row-es", {i + 1, cols.size()});
  }
  const auto inc = static_cast<std::size_t>(std::count(row_dir.begin(), row_dir.end(), 1));
  const int dir = inc * 2 >= row_dir.size() ? 1 : -1;
  std::vector<Index> chosen;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (row_dir[i] == dir) chosen.push_back(rows[i]);
  if (chosen.size() < n) return ExtractionResult::failure("row-majority", {chosen.size()});
  return ExtractionResult::success(Subgrid{{first(chosen, n), first(cols, t)}},
                                   MonotonicityPattern{{n > 1 ? key->second : 1, t > 1 ? dir : 1}});
}

ExtractionResult extract_inconsistent(const RankArray& array, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  const std::size_t d = array.ndim();
  if (d == 1) {
    auto es = es_monotone_subsequence(array.ranks());
    if (es.indices.size() < n) return ExtractionResult::failure("es", {es.indices.size()});
    return ExtractionResult::success(Subgrid{{first(es.indices, n)}},
                                     MonotonicityPattern{{es.direction}});
  }
  if (!fits(array, n)) return ExtractionResult::failure("size", array.dims());

  std::map<Subgrid, std::vector<Index>> classes;
  for (Index h = 1; h <= array.extent(d - 1); ++h) {
    auto r = extract_inconsistent(slice(array, d, h), n);
    if (r.found()) classes[*r.subgrid].push_back(h);
  }
  if (classes.empty()) return ExtractionResult::failure("slice-extraction", {0});
  const Subgrid* where = nullptr;
  std::vector<Index> heights;
  for (const auto& [s, hs] : classes) {
    if (hs.size() > heights.size()) {
      where = &s;
      heights = hs;
    }
  }
  if (heights.size() < n) return ExtractionResult::failure("location-pigeonhole", {heights.size()});

  Coord x(d);
  std::vector<std::size_t> pos(d - 1, 0);
  std::vector<Rank> seq;
  while (true) {
    for (std::size_t k = 0; k + 1 < d; ++k) x[k] = where->indices[k][pos[k]];
    seq.clear();
    for (auto h : heights) {
      x[d - 1] = h;
      seq.push_back(array.at(x));
    }
    heights = pick(heights, es_monotone_subsequence(seq).indices);
    if (heights.size() < n) return ExtractionResult::failure("height-es", {heights.size()});
    std::size_t k = 0;
    for (; k + 1 < d; ++k) {
      if (++pos[k] < n) break;
      pos[k] = 0;
    }
    if (k + 1 == d) break;
  }
  Subgrid out = *where;
  out.indices.push_back(first(heights, n));
  return ExtractionResult::success(std::move(out));
}

ExtractionResult extract_monotone_d(const RankArray& array, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  const std::size_t d = array.ndim();
  if (d == 1) return extract_inconsistent(array, n);
  if (!fits(array, n)) return ExtractionResult::failure("size", array.dims());

  std::vector<Subgrid> found;
  ExtractionResult last;
  const std::size_t cap = *std::min_element(array.dims().begin(), array.dims().end());
  for (std::size_t m = n; m <= cap; ++m) {
    last = extract_inconsistent(array, m);
    if (!last.found()) break;
    found.push_back(*last.subgrid);
  }
  if (found.empty()) {
    auto r = ExtractionResult::failure("inconsistent-extraction", last.achieved);
    r.achieved.insert(r.achieved.begin(), 0);
    return r;
  }
  for (auto it = found.rbegin(); it != found.rend(); ++it) {
    const RankArray sub = restrict(array, *it);
    GridColoring col{sub.dims(), std::vector<Color>(sub.size()), Color{1} << d};
    for (std::size_t off = 0; off < sub.size(); ++off) {
      auto p = pattern_at(sub, sub.coord_of(off));
      Color c = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (p.signs[k] < 0) c |= Color{1} << k;
      col.colors[off] = c;
    }
    auto mono = mono_subgrid_d(col, n);
    if (!mono) continue;
    MonotonicityPattern pattern{std::vector<int>(d, 1)};
    for (std::size_t k = 0; k < d; ++k)
      if (mono->color & (Color{1} << k)) pattern.signs[k] = -1;
    return ExtractionResult::success(compose(*it, mono->subgrid), std::move(pattern));
  }
  return ExtractionResult::failure("pattern-ramsey", {found.size() + n - 1});
}

namespace {

struct LayerHit {
  std::vector<Index> s1, s2;
  MonotonicityPattern pattern;
  friend auto operator<=>(const LayerHit&, const LayerHit&) = default;
};

std::vector<std::pair<std::size_t, std::size_t>> layer_schedule(std::size_t n, std::size_t n1,
                                                                 std::size_t n2) {
  std::size_t c0 = n2;
  if (n < 16) c0 = std::min(n2, n << (2 * n));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r : {std::min(2 * n, n1), n}) {
    for (std::size_t c = c0; c >= n; c /= 2) {
      out.emplace_back(r, c);
      if (c == n) break;
      if (c / 2 < n) out.emplace_back(r, n);
    }
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ExtractionResult extract_monotone_3d(const RankArray& array, std::size_t n) {
  if (array.ndim() != 3) throw PreconditionError("extract_monotone_3d needs a 3-dimensional array");
  if (n == 0) throw PreconditionError("n must be positive");
  if (!fits(array, n)) return ExtractionResult::failure("size", array.dims());
  if (n == 1) return ExtractionResult::success(Subgrid{{{1}, {1}, {1}}}, MonotonicityPattern{{1, 1, 1}});

  const auto schedule = layer_schedule(n, array.extent(0), array.extent(1));
  std::map<LayerHit, std::vector<Index>> classes;
  for (Index h = 1; h <= array.extent(2); ++h) {
    const RankArray layer = slice(array, 3, h);
    for (auto [r, c] : schedule) {
      auto res = extract_monotone_2d(layer, r, c);
      if (!res.found()) continue;
      classes[{res.subgrid->indices[0], res.subgrid->indices[1], *res.pattern}].push_back(h);
      break;
    }
  }
  if (classes.empty()) return ExtractionResult::failure("layer-extraction", {0});
  const LayerHit* hit = nullptr;
  const std::vector<Index>* heights = nullptr;
  for (const auto& [k, hs] : classes) {
    if (!heights || hs.size() > heights->size()) {
      hit = &k;
      heights = &hs;
    }
  }
  const std::size_t q = heights->size();
  if (q < n) return ExtractionResult::failure("layer-pigeonhole", {q});

  // Pair colouring: position in S2 along dimension 1, position in S1 along
  // dimension 2; colour 0 where the lower layer is larger.
  using Key = std::tuple<std::vector<Index>, std::vector<Index>, Color>;
  std::map<Key, Color> ids;
  std::vector<Key> keys;
  std::vector<std::vector<std::optional<Color>>> edge(q, std::vector<std::optional<Color>>(q));
  const auto& s1 = hit->s1;
  const auto& s2 = hit->s2;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      GridColoring col{{s2.size(), s1.size()}, std::vector<Color>(s1.size() * s2.size()), 2};
      for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = 0; j < s2.size(); ++j)
          col.colors[j + i * s2.size()] =
              array.at({s1[i], s2[j], (*heights)[a]}) > array.at({s1[i], s2[j], (*heights)[b]}) ? 0 : 1;
      auto rect = mono_subgrid_2d(col, n, n);
      if (!rect) continue;
      Key key{rect->cols, rect->rows, rect->color};
      auto [it, inserted] = ids.try_emplace(key, static_cast<Color>(keys.size()));
      if (inserted) keys.push_back(key);
      edge[a][b] = it->second;
    }
  }
  if (keys.empty()) return ExtractionResult::failure("layer-pair-ramsey", {q});
  const auto none = static_cast<Color>(keys.size());
  EdgeColoring ec(q, none + 1, none);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (edge[a][b]) ec.set(a + 1, b + 1, *edge[a][b]);
  std::vector<bool> usable(none + 1, true);
  usable[none] = false;
  auto clique = mono_clique(ec, n, usable);
  if (!clique) return ExtractionResult::failure("clique", {q, keys.size()});

  const auto& [p1, p2, color] = keys[clique->color];
  std::vector<Index> hs;
  for (auto v : clique->vertices) hs.push_back((*heights)[v - 1]);
  MonotonicityPattern pattern = hit->pattern;
  pattern.signs.push_back(color == 0 ? -1 : 1);
  return ExtractionResult::success(Subgrid{{pick(s1, p1), pick(s2, p2), hs}}, std::move(pattern));
}

}  // namespace gridlex
