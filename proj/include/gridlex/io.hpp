#pragma once

#include <stdexcept>
#include <string>

#include "gridlex/grid.hpp"
#include "gridlex/result.hpp"

namespace gridlex {

/// Malformed file content (as opposed to a well-formed non-permutation,
/// which raises InvalidArray).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dims": [...], "ranks": [...]}
std::string to_json(const RankArray& array);

/// One line per row, top row (largest dimension-2 index) first.
std::string to_text2d(const RankArray& array);

/// Parses either format; JSON is recognised by a leading '{'.
RankArray parse_array(const std::string& content);

RankArray read_array_file(const std::string& path);

/// {"indices": [[...], ...]}
std::string subgrid_json(const Subgrid& sub);

}  // namespace gridlex
