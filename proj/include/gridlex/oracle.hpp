#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridlex/count.hpp"
#include "gridlex/grid.hpp"

namespace gridlex {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits for exhaustive searches. `max_candidates` caps the number of
/// examined search nodes (partial or complete candidates).
struct SearchBudget {
  std::optional<std::uint64_t> max_candidates;
  std::optional<double> max_seconds;
};

struct SearchStats {
  /// Candidates ruled out or checked; equals the full candidate count
  /// whenever a search ends without a witness.
  Count discharged = 0;
  std::uint64_t examined = 0;
};

struct LexWitness {
  Subgrid subgrid;
  LexType type;
};

/**
 * First subgrid of the given shape whose restriction is lex-monotone of one
 * of `types` (all types when empty), in lexicographic order of the index
 * lists, ties broken by position in `types`.
 *
 * Two-dimensional searches fix the extreme indices along the minor
 * dimension, bound the major dimension by a longest-chain computation and
 * only then enumerate the interior; `pruned = false` enumerates every
 * candidate. Throws BudgetExceeded when a limit is hit.
 */
std::optional<LexWitness> brute_lex_subgrid(const RankArray& array, const Dims& shape,
                                            std::span<const LexType> types = {},
                                            const SearchBudget& budget = {},
                                            SearchStats* stats = nullptr, bool pruned = true);

struct MonotoneWitness {
  Subgrid subgrid;
  MonotonicityPattern pattern;
};

/// First monotone subgrid of the given shape in lexicographic order.
std::optional<MonotoneWitness> brute_monotone_subgrid(const RankArray& array, const Dims& shape,
                                                      const SearchBudget& budget = {},
                                                      SearchStats* stats = nullptr);

enum class SquareKind { monotone, lex };

/// Largest n with an n x ... x n subgrid of the given kind.
std::size_t max_square(const RankArray& array, SquareKind kind, const SearchBudget& budget = {});

struct CertificateCheck {
  std::string id;
  bool pass = false;
  std::optional<Subgrid> witness;
};

struct CertificateReport {
  std::string construction;
  std::size_t n = 0;
  std::vector<CertificateCheck> checks;

  bool all_pass() const;
};

/// "increasing" and "no-lex-n-square" for a candidate lower-bound array.
CertificateReport certify_f2_array(const RankArray& array, std::size_t n,
                                   const SearchBudget& budget = {});

/// Block properties G1, G2, H1, H2 plus certify_f2_array on gen_f2_lower(n).
CertificateReport verify_f2_construction(std::size_t n, const SearchBudget& budget = {});

/// Worker threads for parallel searches: GRIDLEX_THREADS if set, else the
/// hardware concurrency.
unsigned thread_count();

}  // namespace gridlex
