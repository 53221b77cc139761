#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridlex/grid.hpp"

namespace gridlex {

/// Outcome of a best-effort extraction.
///
/// On success `subgrid` is set and, depending on the operation, `pattern`
/// and/or `lex_type` describe its restriction. On failure `stage` names the
/// first step that ran short and `achieved` holds the sizes reached there.
struct ExtractionResult {
  std::optional<Subgrid> subgrid;
  std::optional<MonotonicityPattern> pattern;
  std::optional<LexType> lex_type;
  std::string stage;
  std::vector<std::size_t> achieved;

  bool found() const noexcept { return subgrid.has_value(); }

  static ExtractionResult success(Subgrid sub, std::optional<MonotonicityPattern> pattern = {},
                                  std::optional<LexType> lex_type = {}) {
    ExtractionResult r;
    r.subgrid = std::move(sub);
    r.pattern = std::move(pattern);
    r.lex_type = std::move(lex_type);
    return r;
  }

  static ExtractionResult failure(std::string stage, std::vector<std::size_t> achieved = {}) {
    ExtractionResult r;
    r.stage = std::move(stage);
    r.achieved = std::move(achieved);
    return r;
  }
};

}  // namespace gridlex
