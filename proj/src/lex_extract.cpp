#include "gridlex/lex_extract.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gridlex/monotone_extract.hpp"

namespace gridlex {

namespace {

void require_increasing(const RankArray& array) {
  if (!is_increasing(array)) throw PreconditionError("array is not increasing");
}

bool fits(const RankArray& array, std::size_t n) {
  return std::all_of(array.dims().begin(), array.dims().end(), [&](auto s) { return s >= n; });
}

std::vector<Index> iota_from(Index start, std::size_t count) {
  std::vector<Index> v(count);
  std::iota(v.begin(), v.end(), start);
  return v;
}

Subgrid corner(std::size_t d) { return Subgrid{std::vector<std::vector<Index>>(d, {1})}; }

// Smallest-first chain x_1 < x_2 < ... in [1, len] with before(x_k, x_{k+1}),
// for a relation that only gets easier as its second argument grows.
template <typename Rel>
std::vector<Index> greedy_chain(std::size_t len, std::size_t want, Rel before) {
  std::vector<Index> out;
  if (len == 0) return out;
  out.push_back(1);
  Index next = 2;
  while (out.size() < want) {
    while (next <= len && !before(out.back(), next)) ++next;
    if (next > len) break;
    out.push_back(next++);
  }
  return out;
}

ExtractionResult finish(const RankArray& array, Subgrid sub) {
  auto lt = detect_lex_type(restrict(array, sub));
  if (!lt) throw std::logic_error("assembled subarray is not lexicographic");
  return ExtractionResult::success(std::move(sub), std::nullopt, std::move(lt));
}

RankArray drop_dim(const RankArray& r, std::size_t dim) {
  Dims dims = r.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(dim - 1));
  return RankArray(std::move(dims), std::vector<Rank>(r.ranks().begin(), r.ranks().end()));
}

RankArray layer_array(const RankArray& array, const StackDecomposition& sd, std::size_t j) {
  return drop_dim(restrict(array, sd.layer(j)), sd.dim);
}

// Host subgrid from positions within the bases and chosen layer numbers.
Subgrid lift(const StackDecomposition& sd, const std::vector<std::vector<Index>>& positions,
             const std::vector<std::size_t>& layers) {
  Subgrid out;
  std::size_t b = 0;
  for (std::size_t k = 1; k <= sd.bases.size() + 1; ++k) {
    std::vector<Index> idx;
    if (k == sd.dim) {
      for (auto j : layers) idx.push_back(sd.heights[j]);
    } else {
      for (auto p : positions[b]) idx.push_back(sd.bases[b][p - 1]);
      ++b;
    }
    out.indices.push_back(std::move(idx));
  }
  return out;
}

}  // namespace

Subgrid StackDecomposition::layer(std::size_t j) const {
  Subgrid s;
  s.indices = bases;
  s.indices.insert(s.indices.begin() + static_cast<std::ptrdiff_t>(dim - 1), {heights.at(j)});
  return s;
}

bool check_stack(const RankArray& array, const StackDecomposition& sd) {
  const std::size_t d = array.ndim();
  if (sd.dim < 1 || sd.dim > d || sd.bases.size() + 1 != d || sd.heights.empty()) return false;
  try {
    sd.layer(0).validate(array.dims());
    Subgrid{{sd.heights}}.validate({array.extent(sd.dim - 1)});
  } catch (const InvalidSubgrid&) {
    return false;
  }
  std::vector<Rank> lo, hi;
  for (std::size_t j = 0; j < sd.heights.size(); ++j) {
    Rank mn = static_cast<Rank>(array.size()), mx = 0;
    const Subgrid s = sd.layer(j);
    std::vector<std::size_t> pos(d, 0);
    while (true) {
      Coord x(d);
      for (std::size_t k = 0; k < d; ++k) x[k] = s.indices[k][pos[k]];
      const Rank v = array.at(x);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
      std::size_t k = 0;
      for (; k < d; ++k) {
        if (++pos[k] < s.indices[k].size()) break;
        pos[k] = 0;
      }
      if (k == d) break;
    }
    lo.push_back(mn);
    hi.push_back(mx);
  }
  for (std::size_t j = 0; j + 1 < hi.size(); ++j)
    if (hi[j] >= lo[j + 1]) return false;
  return true;
}

ExtractionResult fg_extract_lex_2d(const RankArray& array, std::size_t n) {
  if (array.ndim() != 2) throw PreconditionError("fg_extract_lex_2d needs a 2-dimensional array");
  if (n == 0) throw PreconditionError("n must be positive");
  require_increasing(array);
  const std::size_t n1 = array.extent(0), n2 = array.extent(1);
  if (n1 < n || n2 < n) return ExtractionResult::failure("size", {n1, n2});
  if (n == 1) return finish(array, corner(2));
  auto f = [&](Index x, Index y) { return array.at(x, y); };

  auto anchors = [&](std::size_t len) {
    std::vector<Index> a;
    for (Index v = 1; v <= len; v += n - 1) a.push_back(v);
    return a;
  };
  const auto a = anchors(n1), b = anchors(n2);
  auto red = [&](std::size_t i, std::size_t j) { return f(a[i + 1], b[j]) < f(a[i], b[j + 1]); };

  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    std::vector<Index> ys;
    for (std::size_t j = 0; j + 1 < b.size() && ys.size() < n - 1; ++j)
      if (red(i, j)) ys.push_back(j);
    if (ys.size() < n - 1) continue;
    std::vector<Index> dim2;
    for (auto j : ys) dim2.push_back(b[j]);
    dim2.push_back(b[ys.back() + 1]);
    return finish(array, Subgrid{{iota_from(a[i], n), dim2}});
  }
  for (std::size_t j = 0; j + 1 < b.size(); ++j) {
    std::vector<Index> xs;
    for (std::size_t i = 0; i + 1 < a.size() && xs.size() < n - 1; ++i)
      if (!red(i, j)) xs.push_back(i);
    if (xs.size() < n - 1) continue;
    std::vector<Index> dim1;
    for (auto i : xs) dim1.push_back(a[i]);
    dim1.push_back(a[xs.back() + 1]);
    return finish(array, Subgrid{{dim1, iota_from(b[j], n)}});
  }

  // Below the guarantee size: a type needs only its extreme indices along the
  // minor dimension, so consecutive bands there are exhaustive.
  for (Index s = 1; s + n - 1 <= n2; ++s) {
    auto xs = greedy_chain(n1, n, [&](Index x, Index x2) { return f(x, s + n - 1) < f(x2, s); });
    if (xs.size() == n) return finish(array, Subgrid{{xs, iota_from(s, n)}});
  }
  for (Index s = 1; s + n - 1 <= n1; ++s) {
    auto ys = greedy_chain(n2, n, [&](Index y, Index y2) { return f(s + n - 1, y) < f(s, y2); });
    if (ys.size() == n) return finish(array, Subgrid{{iota_from(s, n), ys}});
  }
  return ExtractionResult::failure("anchor-colouring", {a.size(), b.size()});
}

std::optional<StackDecomposition> dominant_coordinate(const RankArray& array, std::size_t m,
                                                      std::size_t t) {
  const std::size_t d = array.ndim();
  if (d < 2 || m < 2 || t < 2) throw PreconditionError("dominant_coordinate needs d, m, t >= 2");
  const std::size_t side = d * d * m * t;
  if (!fits(array, side))
    throw PreconditionError("every dimension must be at least " + std::to_string(side));
  require_increasing(array);

  // x_i and C_i use 0-based i and k here.
  auto x = [&](std::size_t i, std::size_t k) { return ((i + d - k - 1) % d + 1) * m; };
  auto c_lo = [&](std::size_t i, std::size_t k) { return k == i ? m : x(i, k); };
  auto c_hi = [&](std::size_t i, std::size_t k) { return k == i ? m : x(i, k) + m; };

  const std::size_t per = d * t;  // T has per^d points
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) total *= per;
  std::vector<std::size_t> chi(total);
  std::vector<std::size_t> count(d, 0);
  Coord p(d);
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t best = 0;
    Rank best_val = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t rest = g;
      for (std::size_t k = 0; k < d; ++k) {
        p[k] = (rest % per) * d * m + x(i, k);
        rest /= per;
      }
      const Rank v = array.at(p);
      if (i == 0 || v > best_val) {
        best = i;
        best_val = v;
      }
    }
    chi[g] = best;
    ++count[best];
  }
  std::vector<std::size_t> colors(d);
  std::iota(colors.begin(), colors.end(), 0);
  std::stable_sort(colors.begin(), colors.end(), [&](auto u, auto v) { return count[u] > count[v]; });

  for (auto i : colors) {
    // columns along dimension i, other coordinates in lexicographic order
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < d; ++k)
      if (k != i) others.push_back(k);
    std::vector<std::size_t> g(d, 0);
    while (true) {
      std::vector<std::size_t> hits;
      for (std::size_t gi = 0; gi < per && hits.size() < t; ++gi) {
        g[i] = gi;
        std::size_t flat = 0;
        for (std::size_t k = d; k-- > 0;) flat = flat * per + g[k];
        if (chi[flat] == i) hits.push_back(gi);
      }
      if (hits.size() == t) {
        StackDecomposition sd;
        sd.dim = i + 1;
        for (auto k : others) {
          std::vector<Index> base;
          for (std::size_t v = c_lo(i, k); v <= c_hi(i, k); ++v) base.push_back(g[k] * d * m + v);
          sd.bases.push_back(std::move(base));
        }
        for (auto gi : hits) sd.heights.push_back(gi * d * m + m);
        if (!check_stack(array, sd)) return std::nullopt;
        return sd;
      }
      std::size_t j = others.size();
      while (j-- > 0) {
        if (++g[others[j]] < per) break;
        g[others[j]] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
  return std::nullopt;
}

std::optional<StackDecomposition> find_stack(const RankArray& array, std::size_t min_base,
                                             std::size_t min_heights) {
  require_increasing(array);
  const std::size_t d = array.ndim();
  if (d < 2) return std::nullopt;
  const std::size_t side = *std::min_element(array.dims().begin(), array.dims().end());
  const std::size_t h = std::max<std::size_t>(min_heights, 2);
  for (std::size_t m = side / (d * d * h); m >= 2; --m) {
    const std::size_t t = side / (d * d * m);
    if (m + 1 < min_base) break;
    auto sd = dominant_coordinate(array, m, t);
    if (sd && sd->heights.size() >= min_heights) return sd;
  }

  std::optional<StackDecomposition> best;
  for (std::size_t i = 1; i <= d; ++i) {
    bool ok = true;
    Coord lo(d, 1), hi(array.dims().begin(), array.dims().end());
    for (std::size_t k = 0; k < d; ++k)
      if (k + 1 != i && array.extent(k) < min_base) ok = false;
    if (!ok) continue;
    auto chain = greedy_chain(array.extent(i - 1), array.extent(i - 1), [&](Index a, Index b) {
      hi[i - 1] = a;
      lo[i - 1] = b;
      return array.at(hi) < array.at(lo);
    });
    if (chain.size() < min_heights) continue;
    if (best && best->heights.size() >= chain.size()) continue;
    StackDecomposition sd;
    sd.dim = i;
    for (std::size_t k = 0; k < d; ++k)
      if (k + 1 != i) sd.bases.push_back(iota_from(1, array.extent(k)));
    sd.heights = std::move(chain);
    best = std::move(sd);
  }
  return best;
}

namespace {

// Lexicographically first n-subset of positions whose every member lies in
// the sets of at least n layers.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> common_tuple(
    const std::vector<std::vector<bool>>& sets, std::size_t len, std::size_t n) {
  std::vector<std::size_t> chosen;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  auto dfs = [&](auto&& self, std::size_t from, const std::vector<std::size_t>& support) -> bool {
    if (chosen.size() == n) {
      out.emplace(chosen, std::vector<std::size_t>(support.begin(), support.begin() + static_cast<std::ptrdiff_t>(n)));
      return true;
    }
    for (std::size_t p = from; p + (n - chosen.size()) <= len; ++p) {
      std::vector<std::size_t> next;
      for (auto l : support)
        if (sets[l][p]) next.push_back(l);
      if (next.size() < n) continue;
      chosen.push_back(p);
      if (self(self, p + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<std::size_t> all(sets.size());
  std::iota(all.begin(), all.end(), 0);
  dfs(dfs, 0, all);
  return out;
}

}  // namespace

ExtractionResult extract_lex_3d(const RankArray& array, std::size_t n) {
  if (array.ndim() != 3) throw PreconditionError("extract_lex_3d needs a 3-dimensional array");
  if (n == 0) throw PreconditionError("n must be positive");
  require_increasing(array);
  if (!fits(array, n)) return ExtractionResult::failure("size", array.dims());
  if (n == 1) return finish(array, corner(3));
  auto sd = find_stack(array, n, n);
  if (!sd) return ExtractionResult::failure("dominant-coordinate", array.dims());

  std::vector<RankArray> layers;
  for (std::size_t j = 0; j < sd->heights.size(); ++j) layers.push_back(layer_array(array, *sd, j));
  const std::size_t q = layers.size();
  const std::size_t np = sd->bases[0].size(), nq = sd->bases[1].size();

  // Blocks of n x n; red when the (min P, max Q) corner is below (max P, min Q).
  const std::size_t bp = np / n, bq = nq / n;
  if (bp > 0 && bq > 0) {
    std::vector<std::vector<bool>> red(q, std::vector<bool>(bp * bq));
    for (std::size_t l = 0; l < q; ++l)
      for (std::size_t r = 0; r < bp; ++r)
        for (std::size_t c = 0; c < bq; ++c)
          red[l][r + c * bp] = layers[l].at(r * n + 1, c * n + n) < layers[l].at(r * n + n, c * n + 1);

    struct Candidate {
      std::size_t score;
      int orient;  // 0 red along a Q band, 1 blue along a P band
      std::size_t line;
    };
    std::vector<Candidate> cands;
    for (int orient = 0; orient < 2; ++orient) {
      const std::size_t lines = orient == 0 ? bq : bp, len = orient == 0 ? bp : bq;
      for (std::size_t line = 0; line < lines; ++line) {
        std::size_t score = 0;
        for (std::size_t l = 0; l < q; ++l) {
          std::size_t hits = 0;
          for (std::size_t p = 0; p < len; ++p) {
            const bool is_red = orient == 0 ? red[l][p + line * bp] : red[l][line + p * bp];
            if (is_red == (orient == 0)) ++hits;
          }
          if (2 * hits >= len) ++score;
        }
        cands.push_back({score, orient, line});
      }
    }
    std::stable_sort(cands.begin(), cands.end(), [](auto& u, auto& v) { return u.score > v.score; });
    for (const auto& cand : cands) {
      const std::size_t len = cand.orient == 0 ? bp : bq;
      if (len < n) continue;
      std::vector<std::vector<bool>> sets(q, std::vector<bool>(len));
      for (std::size_t l = 0; l < q; ++l)
        for (std::size_t p = 0; p < len; ++p)
          sets[l][p] = cand.orient == 0 ? red[l][p + cand.line * bp] : !red[l][cand.line + p * bp];
      auto tuple = common_tuple(sets, len, n);
      if (!tuple) continue;
      std::vector<Index> corners;
      for (auto p : tuple->first) corners.push_back(p * n + 1);
      const auto band = iota_from(cand.line * n + 1, n);
      std::vector<std::vector<Index>> pos = cand.orient == 0 ? std::vector{corners, band}
                                                             : std::vector{band, corners};
      return finish(array, lift(*sd, pos, tuple->second));
    }
  }

  // Band search: the layer-minor dimension only matters through its extremes.
  for (int orient = 0; orient < 2; ++orient) {
    const std::size_t major = orient == 0 ? np : nq, minor = orient == 0 ? nq : np;
    for (Index s = 1; s + n - 1 <= minor; ++s) {
      auto val = [&](std::size_t l, Index a, Index b) {
        return orient == 0 ? layers[l].at(a, b) : layers[l].at(b, a);
      };
      std::vector<std::size_t> chosen;
      std::vector<Index> chain;
      for (std::size_t l = 0; l < q && chosen.size() < n; ++l) {
        chosen.push_back(l);
        auto c = greedy_chain(major, n, [&](Index a, Index b) {
          return std::all_of(chosen.begin(), chosen.end(),
                             [&](auto k) { return val(k, a, s + n - 1) < val(k, b, s); });
        });
        if (c.size() == n)
          chain = std::move(c);
        else
          chosen.pop_back();
      }
      if (chosen.size() < n) continue;
      const auto band = iota_from(s, n);
      std::vector<std::vector<Index>> pos = orient == 0 ? std::vector{chain, band} : std::vector{band, chain};
      return finish(array, lift(*sd, pos, chosen));
    }
  }
  return ExtractionResult::failure("layer-matching", {q, np, nq});
}

ExtractionResult extract_lex_d(const RankArray& array, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  require_increasing(array);
  const std::size_t d = array.ndim();
  if (d == 2) return fg_extract_lex_2d(array, n);
  if (!fits(array, n)) return ExtractionResult::failure("size", array.dims());
  if (d == 1) return finish(array, Subgrid{{iota_from(1, n)}});
  if (n == 1) return finish(array, corner(d));
  auto sd = find_stack(array, n, n);
  if (!sd) return ExtractionResult::failure("dominant-coordinate", array.dims());

  std::map<std::pair<LexType, Subgrid>, std::vector<std::size_t>> classes;
  for (std::size_t j = 0; j < sd->heights.size(); ++j) {
    auto r = extract_lex_d(layer_array(array, *sd, j), n);
    if (r.found()) classes[{*r.lex_type, *r.subgrid}].push_back(j);
  }
  if (classes.empty()) return ExtractionResult::failure("layer-extraction", {sd->heights.size()});
  const std::pair<LexType, Subgrid>* key = nullptr;
  const std::vector<std::size_t>* layers = nullptr;
  for (const auto& [k, v] : classes) {
    if (!layers || v.size() > layers->size()) {
      key = &k;
      layers = &v;
    }
  }
  if (layers->size() < n) return ExtractionResult::failure("layer-pigeonhole", {layers->size()});
  std::vector<std::size_t> use(layers->begin(), layers->begin() + static_cast<std::ptrdiff_t>(n));
  return finish(array, lift(*sd, key->second.indices, use));
}

ExtractionResult pipeline_lex_monotone(const RankArray& array, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  const std::size_t d = array.ndim();
  if (!fits(array, n)) return ExtractionResult::failure("size", array.dims());
  const std::size_t side = *std::min_element(array.dims().begin(), array.dims().end());
  std::string stage = "monotone-extraction";
  std::size_t best_monotone = 0;
  for (std::size_t k = side; k >= n; --k) {
    ExtractionResult mono;
    if (d == 1)
      mono = extract_inconsistent(array, k);
    else if (d == 2)
      mono = extract_monotone_2d(array, k, k);
    else if (d == 3)
      mono = extract_monotone_3d(array, k);
    else
      mono = extract_monotone_d(array, k);
    if (mono.found()) {
      best_monotone = std::max(best_monotone, k);
      const RankArray sub = restrict(array, *mono.subgrid);
      const Normalized norm = normalize_to_increasing(sub, *monotone_pattern(sub));
      auto lex = extract_lex_d(norm.array, n);
      if (lex.found()) return finish(array, compose(*mono.subgrid, norm.to_source(*lex.subgrid)));
      stage = "lex-extraction";
    }
    if (k == n) break;
  }
  return ExtractionResult::failure(stage, {best_monotone});
}

}  // namespace gridlex
