#include "gridlex/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "gridlex/constructions.hpp"

namespace gridlex {

unsigned thread_count() {
  if (const char* env = std::getenv("GRIDLEX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

class Meter {
 public:
  explicit Meter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++examined;
    if (budget_.max_candidates && examined > *budget_.max_candidates)
      throw BudgetExceeded("candidate budget of " + std::to_string(*budget_.max_candidates) + " exhausted");
    if (budget_.max_seconds && (examined & 1023) == 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > *budget_.max_seconds) throw BudgetExceeded("time budget exhausted");
    }
  }

  Count discharged = 0;
  std::uint64_t examined = 0;

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool next_combination(std::vector<Index>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Index> first_combination(std::size_t k) {
  std::vector<Index> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i + 1;
  return c;
}

void require_shape(const RankArray& array, const Dims& shape) {
  if (shape.size() != array.ndim()) throw PreconditionError("shape dimension does not match array");
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (shape[k] < 1 || shape[k] > array.extent(k))
      throw PreconditionError("shape does not fit the array");
}

// Per-dimension restriction used while fixing a witness index by index.
struct Constraint {
  std::vector<char> forced, forbidden;  // indexed 1..N
};

Constraint prefix_constraint(std::size_t size, const std::vector<Index>& prefix) {
  Constraint c{std::vector<char>(size + 1, 0), std::vector<char>(size + 1, 0)};
  const Index last = prefix.empty() ? 0 : prefix.back();
  for (Index x = 1; x <= last; ++x) c.forbidden[x] = 1;
  for (auto x : prefix) {
    c.forbidden[x] = 0;
    c.forced[x] = 1;
  }
  return c;
}

// Existence search for one 2-D type. Coordinates are re-indexed so that the
// type reads "major increasing, then minor increasing".
class LexChainSearch {
 public:
  LexChainSearch(const RankArray& array, const Dims& shape, const LexType& lt,
                 const Constraint* cons, Meter& meter)
      : meter_(meter) {
    const std::size_t maj = static_cast<std::size_t>(lt.sigma[0] - 1), min = 1 - maj;
    nM_ = array.extent(maj);
    nm_ = array.extent(min);
    a_ = shape[maj];
    b_ = shape[min];
    const bool rev_major = lt.signs[maj] < 0, rev_minor = lt.signs[min] < 0;
    auto view = [](bool rev, std::size_t n, Index x) { return rev ? n + 1 - x : x; };
    g_.resize(nM_ * nm_);
    for (Index u = 1; u <= nM_; ++u) {
      for (Index v = 1; v <= nm_; ++v) {
        Index x[2];
        x[maj] = view(rev_major, nM_, u);
        x[min] = view(rev_minor, nm_, v);
        g_[(u - 1) * nm_ + (v - 1)] = array.at(x[0], x[1]);
      }
    }
    auto map_cons = [&](std::size_t dim, bool rev, std::size_t n, std::vector<char>& forced,
                        std::vector<char>& forbidden) {
      forced.assign(n + 1, 0);
      forbidden.assign(n + 1, 0);
      if (!cons) return;
      for (Index x = 1; x <= n; ++x) {
        forced[view(rev, n, x)] = cons[dim].forced[x];
        forbidden[view(rev, n, x)] = cons[dim].forbidden[x];
      }
    };
    map_cons(maj, rev_major, nM_, forced_u_, forbid_u_);
    map_cons(min, rev_minor, nm_, forced_v_, forbid_v_);
    forced_u_count_.assign(nM_ + 1, 0);
    for (Index u = 1; u <= nM_; ++u) forced_u_count_[u] = forced_u_count_[u - 1] + forced_u_[u];
    forced_v_count_.assign(nm_ + 1, 0);
    for (Index v = 1; v <= nm_; ++v) forced_v_count_[v] = forced_v_count_[v - 1] + forced_v_[v];
    all_u_ = binomial(nM_, a_);
  }

  bool run() {
    for (Index p = 1; p <= nm_; ++p) {
      if (forced_v_count_[p - 1] > 0) break;
      const Index q_lo = b_ == 1 ? p : p + b_ - 1, q_hi = b_ == 1 ? p : nm_;
      for (Index q = q_lo; q <= q_hi; ++q) {
        meter_.tick();
        const Count comp = (b_ >= 2 ? binomial(q - p - 1, b_ - 2) : 1) * all_u_;
        if (forbid_v_[p] || forbid_v_[q] || forced_v_count_[nm_] != forced_v_count_[q] ||
            (b_ == 2 && forced_v_count_[q - 1] != forced_v_count_[p])) {
          meter_.discharged += comp;
          continue;
        }
        std::vector<Index> lines;
        for (Index u = 1; u <= nM_; ++u)
          if (!forbid_u_[u] && (b_ == 1 || g(u, p) < g(u, q))) lines.push_back(u);
        if (chain(lines, p, q) < a_) {
          meter_.discharged += comp;
          continue;
        }
        if (b_ <= 2) return true;
        if (interior(p, b_ - 2, lines, p, q)) return true;
      }
    }
    return false;
  }

 private:
  Rank g(Index u, Index v) const { return g_[(u - 1) * nm_ + (v - 1)]; }

  bool forced_between_u(Index lo, Index hi) const {  // exclusive
    return hi > lo + 1 && forced_u_count_[hi - 1] != forced_u_count_[lo];
  }

  // Longest chain of lines, each separated from the next, covering all
  // forced lines. Stops early once a_ is reached.
  std::size_t chain(const std::vector<Index>& lines, Index p, Index q) {
    std::vector<std::size_t> dp(lines.size(), 0);
    std::size_t best = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Index u = lines[i];
      std::size_t cur = forced_u_count_[u - 1] == 0 ? 1 : 0;
      for (std::size_t j = 0; j < i; ++j)
        if (dp[j] > 0 && dp[j] + 1 > cur && g(lines[j], q) < g(u, p) && !forced_between_u(lines[j], u))
          cur = dp[j] + 1;
      dp[i] = cur;
      if (cur > 0 && forced_u_count_[nM_] == forced_u_count_[u]) {
        best = std::max(best, cur);
        if (best >= a_) return best;
      }
    }
    return best;
  }

  bool interior(Index prev, std::size_t need, const std::vector<Index>& lines, Index p, Index q) {
    if (need == 0) {
      if (forced_v_count_[q - 1] != forced_v_count_[prev]) {
        meter_.discharged += all_u_;
        return false;
      }
      return true;
    }
    for (Index v = prev + 1; v + need <= q; ++v) {
      if (forced_v_count_[v - 1] != forced_v_count_[prev]) break;
      meter_.tick();
      const Count comp = binomial(q - v - 1, need - 1) * all_u_;
      if (forbid_v_[v]) {
        meter_.discharged += comp;
        continue;
      }
      std::vector<Index> next;
      for (auto u : lines)
        if (g(u, prev) < g(u, v) && g(u, v) < g(u, q)) next.push_back(u);
      if (chain(next, p, q) < a_) {
        meter_.discharged += comp;
        continue;
      }
      if (interior(v, need - 1, next, p, q)) return true;
    }
    return false;
  }

  Meter& meter_;
  std::size_t nM_, nm_, a_, b_;
  std::vector<Rank> g_;
  std::vector<char> forced_u_, forbid_u_, forced_v_, forbid_v_;
  std::vector<std::size_t> forced_u_count_, forced_v_count_;
  Count all_u_;
};

struct Totals {
  Count discharged = 0;
  std::uint64_t examined = 0;
};

bool exists_2d(const RankArray& array, const Dims& shape, std::span<const LexType> types,
               const Constraint* cons, const SearchBudget& budget, Totals& totals) {
  std::vector<char> hit(types.size(), 0);
  std::vector<Count> discharged(types.size(), 0);
  std::vector<std::uint64_t> examined(types.size(), 0);
  parallel_for(types.size(), [&](std::size_t i) {
    Meter meter(budget);
    hit[i] = LexChainSearch(array, shape, types[i], cons, meter).run();
    discharged[i] = meter.discharged;
    examined[i] = meter.examined;
  });
  for (std::size_t i = 0; i < types.size(); ++i) {
    totals.discharged += discharged[i];
    totals.examined += examined[i];
  }
  if (budget.max_candidates && totals.examined > *budget.max_candidates)
    throw BudgetExceeded("candidate budget of " + std::to_string(*budget.max_candidates) + " exhausted");
  return std::any_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// Depth-first enumeration of subgrids in lexicographic order whose
// restriction is monotone; `leaf` decides whether to stop at a candidate.
class MonotoneEnum {
 public:
  MonotoneEnum(const RankArray& array, const Dims& shape, Meter& meter)
      : array_(array), shape_(shape), meter_(meter), d_(array.ndim()) {}

  std::optional<Subgrid> run(const std::function<bool(const Subgrid&)>& leaf) {
    std::vector<std::vector<Index>> outer;
    for (std::size_t k = 0; k + 1 < d_; ++k) outer.push_back(first_combination(shape_[k]));
    const std::size_t nd = array_.extent(d_ - 1);
    while (true) {
      prepare(outer);
      Subgrid sub;
      sub.indices = outer;
      sub.indices.emplace_back();
      if (descend(sub, 0, nd, leaf)) return sub;
      std::size_t k = outer.size();
      while (k-- > 0) {
        if (next_combination(outer[k], array_.extent(k))) break;
        outer[k] = first_combination(shape_[k]);
      }
      if (k == static_cast<std::size_t>(-1)) return std::nullopt;
    }
  }

 private:
  void prepare(const std::vector<std::vector<Index>>& outer) {
    cells_.clear();
    std::vector<std::size_t> pos(outer.size(), 0);
    while (true) {
      std::size_t off = 0;
      for (std::size_t k = 0; k < outer.size(); ++k) off += (outer[k][pos[k]] - 1) * array_.stride(k);
      cells_.push_back(off);
      std::size_t k = 0;
      for (; k < outer.size(); ++k) {
        if (++pos[k] < outer[k].size()) break;
        pos[k] = 0;
      }
      if (k == outer.size()) break;
    }
    const std::size_t nd = array_.extent(d_ - 1);
    slice_pattern_.assign(nd + 1, std::nullopt);
    std::vector<Rank> vals(cells_.size());
    for (Index h = 1; h <= nd; ++h) {
      for (std::size_t c = 0; c < cells_.size(); ++c) vals[c] = value(c, h);
      slice_pattern_[h] = pattern_of(vals);
    }
  }

  Rank value(std::size_t cell, Index h) const {
    return array_[cells_[cell] + (h - 1) * array_.stride(d_ - 1)];
  }

  // Pattern of the (d-1)-dimensional slice values in subgrid layout order.
  std::optional<std::vector<int>> pattern_of(const std::vector<Rank>& vals) const {
    std::vector<int> signs(d_ - 1, 0);
    std::size_t step = 1;
    for (std::size_t k = 0; k + 1 < d_; ++k) {
      const std::size_t len = shape_[k];
      for (std::size_t c = 0; c < vals.size(); ++c) {
        if ((c / step) % len + 1 >= len) continue;
        const int s = vals[c + step] > vals[c] ? 1 : -1;
        if (signs[k] == 0)
          signs[k] = s;
        else if (signs[k] != s)
          return std::nullopt;
      }
      step *= len;
    }
    for (auto& s : signs)
      if (s == 0) s = 1;
    return signs;
  }

  int direction(Index h1, Index h2) const {
    int dir = 0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const int s = value(c, h2) > value(c, h1) ? 1 : -1;
      if (dir == 0)
        dir = s;
      else if (dir != s)
        return 0;
    }
    return dir;
  }

  bool descend(Subgrid& sub, int sign, std::size_t nd,
               const std::function<bool(const Subgrid&)>& leaf) {
    auto& chosen = sub.indices.back();
    const std::size_t need = shape_[d_ - 1] - chosen.size();
    if (need == 0) {
      if (leaf(sub)) return true;
      meter_.discharged += 1;
      return false;
    }
    const Index from = chosen.empty() ? 1 : chosen.back() + 1;
    for (Index h = from; h + need - 1 <= nd; ++h) {
      meter_.tick();
      bool ok = slice_pattern_[h].has_value();
      int dir = sign;
      if (ok && !chosen.empty()) {
        ok = slice_pattern_[h] == slice_pattern_[chosen.front()];
        if (ok) {
          dir = direction(chosen.back(), h);
          ok = dir != 0 && (sign == 0 || dir == sign);
        }
      }
      if (!ok) {
        meter_.discharged += binomial(nd - h, need - 1);
        continue;
      }
      chosen.push_back(h);
      if (descend(sub, dir, nd, leaf)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const RankArray& array_;
  const Dims& shape_;
  Meter& meter_;
  std::size_t d_;
  std::vector<std::size_t> cells_;
  std::vector<std::optional<std::vector<int>>> slice_pattern_;
};

void record(SearchStats* stats, Count discharged, std::uint64_t examined) {
  if (stats) {
    stats->discharged = discharged;
    stats->examined = examined;
  }
}

std::optional<LexWitness> lex_unpruned(const RankArray& array, const Dims& shape,
                                       std::span<const LexType> types, const SearchBudget& budget,
                                       SearchStats* stats) {
  Meter meter(budget);
  std::vector<std::vector<Index>> sets;
  for (auto s : shape) sets.push_back(first_combination(s));
  std::optional<LexWitness> out;
  while (!out) {
    Subgrid sub{sets};
    const RankArray r = restrict(array, sub);
    for (const auto& lt : types) {
      meter.tick();
      if (lex_type_check(r, lt)) {
        out = LexWitness{sub, lt};
        break;
      }
      meter.discharged += 1;
    }
    std::size_t k = sets.size();
    while (k-- > 0) {
      if (next_combination(sets[k], array.extent(k))) break;
      sets[k] = first_combination(shape[k]);
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  record(stats, meter.discharged, meter.examined);
  return out;
}

}  // namespace

std::optional<LexWitness> brute_lex_subgrid(const RankArray& array, const Dims& shape,
                                            std::span<const LexType> types,
                                            const SearchBudget& budget, SearchStats* stats,
                                            bool pruned) {
  require_shape(array, shape);
  std::vector<LexType> all;
  if (types.empty()) {
    all = all_lex_types(array.ndim());
    types = all;
  }
  for (const auto& lt : types) {
    lt.validate();
    if (lt.ndim() != array.ndim()) throw PreconditionError("lex type dimension does not match array");
  }
  if (!pruned) return lex_unpruned(array, shape, types, budget, stats);

  if (array.ndim() != 2) {
    Meter meter(budget);
    std::optional<LexType> found_type;
    auto witness = MonotoneEnum(array, shape, meter).run([&](const Subgrid& sub) {
      const RankArray r = restrict(array, sub);
      for (const auto& lt : types) {
        if (lex_type_check(r, lt)) {
          found_type = lt;
          return true;
        }
      }
      return false;
    });
    record(stats, meter.discharged * types.size(), meter.examined);
    if (!witness) return std::nullopt;
    return LexWitness{*witness, *found_type};
  }

  Totals totals;
  if (!exists_2d(array, shape, types, nullptr, budget, totals)) {
    record(stats, totals.discharged, totals.examined);
    return std::nullopt;
  }
  const Count first_discharged = totals.discharged;
  // Fix the witness one index at a time, dimension 1 first.
  std::vector<std::vector<Index>> fixed(2);
  Constraint cons[2];
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t slot = 0; slot < shape[k]; ++slot) {
      const Index from = fixed[k].empty() ? 1 : fixed[k].back() + 1;
      bool placed = false;
      for (Index v = from; v + (shape[k] - slot - 1) <= array.extent(k); ++v) {
        auto prefix = fixed[k];
        prefix.push_back(v);
        for (std::size_t j = 0; j < 2; ++j)
          cons[j] = j < k ? prefix_constraint(array.extent(j), fixed[j])
                          : j == k ? prefix_constraint(array.extent(j), prefix)
                                   : prefix_constraint(array.extent(j), {});
        if (k == 1) {
          // dimension 1 is complete: nothing else may be chosen there
          for (Index x = 1; x <= array.extent(0); ++x) cons[0].forbidden[x] = !cons[0].forced[x];
        }
        if (exists_2d(array, shape, types, cons, budget, totals)) {
          fixed[k] = std::move(prefix);
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("witness refinement lost the witness");
    }
  }
  record(stats, first_discharged, totals.examined);
  Subgrid sub{fixed};
  const RankArray r = restrict(array, sub);
  for (const auto& lt : types)
    if (lex_type_check(r, lt)) return LexWitness{sub, lt};
  throw std::logic_error("refined witness has none of the requested types");
}

std::optional<MonotoneWitness> brute_monotone_subgrid(const RankArray& array, const Dims& shape,
                                                      const SearchBudget& budget,
                                                      SearchStats* stats) {
  require_shape(array, shape);
  Meter meter(budget);
  auto witness = MonotoneEnum(array, shape, meter).run([](const Subgrid&) { return true; });
  record(stats, meter.discharged, meter.examined);
  if (!witness) return std::nullopt;
  return MonotoneWitness{*witness, *monotone_pattern(restrict(array, *witness))};
}

std::size_t max_square(const RankArray& array, SquareKind kind, const SearchBudget& budget) {
  const std::size_t side = *std::min_element(array.dims().begin(), array.dims().end());
  for (std::size_t k = side; k >= 2; --k) {
    const Dims shape(array.ndim(), k);
    const bool found = kind == SquareKind::lex ? brute_lex_subgrid(array, shape, {}, budget).has_value()
                                               : brute_monotone_subgrid(array, shape, budget).has_value();
    if (found) return k;
  }
  return 1;
}

bool CertificateReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

namespace {

CertificateCheck absence_check(std::string id, const RankArray& array, const Dims& shape,
                               std::vector<LexType> types, const SearchBudget& budget) {
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (shape[k] > array.extent(k)) return CertificateCheck{std::move(id), true, std::nullopt};
  auto w = brute_lex_subgrid(array, shape, types, budget);
  CertificateCheck c{std::move(id), !w.has_value(), std::nullopt};
  if (w) c.witness = w->subgrid;
  return c;
}

}  // namespace

CertificateReport certify_f2_array(const RankArray& array, std::size_t n, const SearchBudget& budget) {
  CertificateReport report{"f2", n, {}};
  CertificateCheck inc{"increasing", true, std::nullopt};
  if (auto step = find_decreasing_step(array)) {
    inc.pass = false;
    Subgrid w;
    for (std::size_t k = 0; k < array.ndim(); ++k) {
      const Index x = step->first[k];
      w.indices.push_back(k + 1 == step->second ? std::vector<Index>{x, x + 1} : std::vector<Index>{x});
    }
    inc.witness = std::move(w);
  }
  report.checks.push_back(std::move(inc));
  report.checks.push_back(absence_check("no-lex-n-square", array, {n, n}, plain_lex_types(2), budget));
  return report;
}

CertificateReport verify_f2_construction(std::size_t n, const SearchBudget& budget) {
  if (n < 3) throw PreconditionError("verify_f2_construction needs n >= 3");
  const RankArray g = gen_block_g(n), h = gen_block_h(n);
  const LexType t12 = LexType::plain({1, 2}), t21 = LexType::plain({2, 1});
  CertificateReport report{"f2", n, {}};
  report.checks.push_back(absence_check("G1", g, {n - 1, 2}, {t12}, budget));
  report.checks.push_back(absence_check("G2", g, {n, 2}, {t21}, budget));
  report.checks.push_back(absence_check("H1", h, {2, n}, {t12}, budget));
  report.checks.push_back(absence_check("H2", h, {2, n - 1}, {t21}, budget));
  for (auto& c : certify_f2_array(gen_f2_lower(n), n, budget).checks) report.checks.push_back(std::move(c));
  return report;
}

}  // namespace gridlex
