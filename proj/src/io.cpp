#include "gridlex/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gridlex {

using nlohmann::json;

std::string to_json(const RankArray& array) {
  json j;
  j["dims"] = array.dims();
  j["ranks"] = std::vector<Rank>(array.ranks().begin(), array.ranks().end());
  return j.dump() + "\n";
}

std::string to_text2d(const RankArray& array) {
  if (array.ndim() != 2) throw std::invalid_argument("text format needs a 2-dimensional array");
  std::ostringstream os;
  for (Index x2 = array.extent(1); x2 >= 1; --x2) {
    for (Index x1 = 1; x1 <= array.extent(0); ++x1) os << (x1 > 1 ? " " : "") << array.at(x1, x2);
    os << "\n";
  }
  return os.str();
}

namespace {

RankArray parse_json(const std::string& content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("ranks"))
    throw FormatError("expected an object with \"dims\" and \"ranks\"");
  const auto& dims = j["dims"];
  const auto& ranks = j["ranks"];
  if (!dims.is_array() || !ranks.is_array()) throw FormatError("\"dims\" and \"ranks\" must be arrays");
  Dims d;
  for (const auto& v : dims) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError("dims must be non-negative integers");
    d.push_back(v.get<std::size_t>());
  }
  std::vector<Rank> r;
  for (const auto& v : ranks) {
    if (!v.is_number_integer()) throw FormatError("ranks must be integers");
    const long long x = v.get<long long>();
    if (x < 0 || x > static_cast<long long>(UINT32_MAX)) throw InvalidArray("rank out of range");
    r.push_back(static_cast<Rank>(x));
  }
  return RankArray(std::move(d), std::move(r));
}

RankArray parse_text(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw FormatError("not an integer: " + tok);
      }
      if (used != tok.size()) throw FormatError("not an integer: " + tok);
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("empty array");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw FormatError("rows have different lengths");
  const std::size_t height = rows.size();
  std::vector<Rank> ranks(width * height);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const long long v = rows[r][c];
      if (v < 0 || v > static_cast<long long>(UINT32_MAX)) throw InvalidArray("rank out of range");
      ranks[c + (height - 1 - r) * width] = static_cast<Rank>(v);
    }
  }
  return RankArray({width, height}, std::move(ranks));
}

}  // namespace

RankArray parse_array(const std::string& content) {
  const auto start = content.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw FormatError("empty input");
  if (content[start] == '{') return parse_json(content);
  return parse_text(content);
}

RankArray read_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_array(ss.str());
}

std::string subgrid_json(const Subgrid& sub) {
  json j;
  j["indices"] = sub.indices;
  return j.dump();
}

}  // namespace gridlex
