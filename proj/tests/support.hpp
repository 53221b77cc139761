#pragma once

// Reference checkers written from the definitions, independent of the
// library's own predicates.

#include <algorithm>
#include <optional>
#include <vector>

#include "gridlex/grid.hpp"

namespace ref {

using gridlex::Coord;
using gridlex::RankArray;

inline std::vector<Coord> cells(const RankArray& a) {
  std::vector<Coord> out;
  for (std::size_t off = 0; off < a.size(); ++off) out.push_back(a.coord_of(off));
  return out;
}

/// Pairwise definition: f(x) < f(y) iff the signed, permuted tuple of x is
/// lexicographically smaller.
inline bool is_lex(const RankArray& a, const gridlex::LexType& lt) {
  auto key = [&](const Coord& x) {
    std::vector<long> k;
    for (int dim : lt.sigma) k.push_back(lt.signs[dim - 1] * static_cast<long>(x[dim - 1]));
    return k;
  };
  const auto cs = cells(a);
  for (const auto& x : cs)
    for (const auto& y : cs)
      if (x != y && ((a.at(x) < a.at(y)) != (key(x) < key(y)))) return false;
  return true;
}

/// Every line along dimension k is increasing (+1) or every one decreasing (-1).
inline std::optional<std::vector<int>> pattern(const RankArray& a) {
  std::vector<int> out;
  for (std::size_t k = 0; k < a.ndim(); ++k) {
    bool all_inc = true, all_dec = true;
    for (const auto& x : cells(a)) {
      for (const auto& y : cells(a)) {
        bool same_line = x[k] < y[k];
        for (std::size_t j = 0; j < a.ndim() && same_line; ++j)
          if (j != k && x[j] != y[j]) same_line = false;
        if (!same_line) continue;
        if (a.at(x) > a.at(y)) all_inc = false;
        if (a.at(x) < a.at(y)) all_dec = false;
      }
    }
    if (all_inc)
      out.push_back(1);
    else if (all_dec)
      out.push_back(-1);
    else
      return std::nullopt;
  }
  return out;
}

/// Every axis-parallel line monotone, direction free per line.
inline bool inconsistent(const RankArray& a) {
  for (std::size_t k = 0; k < a.ndim(); ++k) {
    for (const auto& x : cells(a)) {
      if (x[k] != 1) continue;
      int dir = 0;
      Coord y = x;
      for (std::size_t i = 1; i < a.extent(k); ++i) {
        Coord z = y;
        ++z[k];
        const int s = a.at(z) > a.at(y) ? 1 : -1;
        if (dir != 0 && s != dir) return false;
        dir = s;
        y = z;
      }
    }
  }
  return true;
}

inline bool increasing(const RankArray& a) {
  const auto cs = cells(a);
  for (const auto& x : cs)
    for (const auto& y : cs) {
      bool le = true;
      for (std::size_t k = 0; k < x.size(); ++k) le = le && x[k] <= y[k];
      if (le && a.at(x) > a.at(y)) return false;
    }
  return true;
}

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = from; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace ref
