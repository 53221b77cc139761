#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gridlex/constructions.hpp"
#include "gridlex/io.hpp"
#include "gridlex/lex_extract.hpp"
#include "gridlex/monotone_extract.hpp"
#include "gridlex/oracle.hpp"

using namespace gridlex;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_list(const std::string& s, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& item : split(s)) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
    }
    if (used != item.size() || v < 0) throw UsageError(std::string("bad ") + what + ": " + s);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<int> parse_signs(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s)) {
    if (item == "+" || item == "+1" || item == "1")
      out.push_back(1);
    else if (item == "-" || item == "-1")
      out.push_back(-1);
    else
      throw UsageError("bad signs: " + s);
  }
  return out;
}

LexType parse_type(const std::string& sigma, const std::string& signs, std::size_t d) {
  LexType lt;
  for (auto v : parse_list(sigma, "sigma")) lt.sigma.push_back(static_cast<int>(v));
  lt.signs = signs.empty() ? std::vector<int>(lt.sigma.size(), 1) : parse_signs(signs);
  if (lt.sigma.size() != d) throw UsageError("sigma length does not match dims");
  try {
    lt.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return lt;
}

json type_json(const LexType& lt) { return {{"sigma", lt.sigma}, {"signs", lt.signs}}; }

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct GenOptions {
  std::string kind, dims, sigma, signs, format = "json", out;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
};

int cmd_gen(const GenOptions& o) {
  auto need_dims = [&] {
    if (o.dims.empty()) throw UsageError("--dims is required");
    auto d = parse_list(o.dims, "dims");
    for (auto s : d)
      if (s == 0) throw UsageError("dims must be positive");
    return d;
  };
  auto need_seed = [&] {
    if (!o.seed) throw UsageError("--seed is required for randomized generators");
    return *o.seed;
  };
  auto need_n = [&] {
    if (o.n < 3) throw UsageError("--n must be at least 3");
    return o.n;
  };
  std::optional<RankArray> a;
  if (o.kind == "random") {
    auto d = need_dims();
    a = gen_random(d, need_seed());
  } else if (o.kind == "increasing") {
    auto d = need_dims();
    a = gen_random_increasing(d, need_seed());
  } else if (o.kind == "lex") {
    auto d = need_dims();
    if (o.sigma.empty()) throw UsageError("--sigma is required");
    a = gen_lex(d, parse_type(o.sigma, o.signs, d.size()));
  } else if (o.kind == "block-g") {
    a = gen_block_g(need_n());
  } else if (o.kind == "block-h") {
    a = gen_block_h(need_n());
  } else if (o.kind == "f2-lower") {
    a = gen_f2_lower(need_n());
  } else {
    throw UsageError("unknown generator: " + o.kind);
  }
  if (o.format == "text") {
    if (a->ndim() != 2) throw UsageError("text format needs a 2-dimensional array");
    write_out(o.out, to_text2d(*a));
  } else {
    write_out(o.out, to_json(*a));
  }
  return 0;
}

int cmd_check(const std::string& file, const std::string& what) {
  const RankArray a = read_array_file(file);
  if (what == "monotone") {
    auto p = monotone_pattern(a);
    std::cout << "monotone: " << (p ? "yes " + to_string(*p) : std::string("no")) << "\n";
    return p ? 0 : 1;
  }
  if (what == "inconsistent") {
    const bool ok = is_inconsistently_monotone(a);
    std::cout << "inconsistently monotone: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  if (what == "lex-type") {
    auto lt = detect_lex_type(a);
    std::cout << "lex-monotone: " << (lt ? "yes " + to_string(*lt) : std::string("no")) << "\n";
    return lt ? 0 : 1;
  }
  if (what == "increasing") {
    const bool ok = is_increasing(a);
    std::cout << "increasing: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  throw UsageError("unknown check: " + what);
}

int cmd_extract(const std::string& file, const std::string& algo, std::size_t n, std::size_t t,
                const std::string& restricted_out) {
  const RankArray a = read_array_file(file);
  if (n == 0) throw UsageError("--n must be positive");
  ExtractionResult r;
  std::string kind = "monotone";
  if (algo == "monotone2d")
    r = extract_monotone_2d(a, n, t == 0 ? n : t);
  else if (algo == "inconsistent")
    r = extract_inconsistent(a, n), kind = "inconsistent";
  else if (algo == "monotone")
    r = extract_monotone_d(a, n);
  else if (algo == "monotone3d")
    r = extract_monotone_3d(a, n);
  else if (algo == "lex2d")
    r = fg_extract_lex_2d(a, n), kind = "lex";
  else if (algo == "lex3d")
    r = extract_lex_3d(a, n), kind = "lex";
  else if (algo == "lex")
    r = extract_lex_d(a, n), kind = "lex";
  else if (algo == "pipeline")
    r = pipeline_lex_monotone(a, n), kind = "lex";
  else
    throw UsageError("unknown algorithm: " + algo);

  json out;
  if (!r.found()) {
    out = {{"status", "failed"}, {"stage", r.stage}, {"achieved", r.achieved}};
    std::cout << out.dump() << "\n";
    return 1;
  }
  out = {{"status", "found"}, {"kind", kind}, {"subgrid", {{"indices", r.subgrid->indices}}}};
  if (r.pattern) out["pattern"] = r.pattern->signs;
  if (r.lex_type) out["type"] = type_json(*r.lex_type);
  std::cout << out.dump() << "\n";
  if (!restricted_out.empty()) write_out(restricted_out, to_json(restrict(a, *r.subgrid)));
  return 0;
}

SearchBudget make_budget(std::optional<std::uint64_t> max_candidates, std::optional<double> max_seconds) {
  return SearchBudget{max_candidates, max_seconds};
}

int cmd_verify(const std::string& construction, std::size_t n, const SearchBudget& budget) {
  if (construction != "f2") throw UsageError("unknown construction: " + construction);
  if (n < 3) throw UsageError("--n must be at least 3");
  const auto report = verify_f2_construction(n, budget);
  for (const auto& c : report.checks) {
    std::cout << c.id << ": " << (c.pass ? "pass" : "FAIL");
    if (c.witness) std::cout << " witness " << subgrid_json(*c.witness);
    std::cout << "\n";
  }
  std::cout << (report.all_pass() ? "certificate: all checks pass" : "certificate: failed") << "\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_search(const std::string& file, const std::string& shape_s, const std::string& kind,
               const std::string& sigma, const std::string& signs, const SearchBudget& budget) {
  const RankArray a = read_array_file(file);
  const Dims shape = parse_list(shape_s, "shape");
  if (shape.size() != a.ndim()) throw UsageError("shape length does not match the array");
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (shape[k] == 0 || shape[k] > a.extent(k)) throw UsageError("shape does not fit the array");
  json out;
  if (kind == "lex") {
    std::vector<LexType> types;
    if (!sigma.empty()) types.push_back(parse_type(sigma, signs, a.ndim()));
    auto w = brute_lex_subgrid(a, shape, types, budget);
    if (!w) {
      std::cout << json{{"status", "absent"}}.dump() << "\n";
      return 1;
    }
    out = {{"status", "found"}, {"subgrid", {{"indices", w->subgrid.indices}}}, {"type", type_json(w->type)}};
  } else if (kind == "monotone") {
    auto w = brute_monotone_subgrid(a, shape, budget);
    if (!w) {
      std::cout << json{{"status", "absent"}}.dump() << "\n";
      return 1;
    }
    out = {{"status", "found"}, {"subgrid", {{"indices", w->subgrid.indices}}}, {"pattern", w->pattern.signs}};
  } else {
    throw UsageError("unknown kind: " + kind);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone and lexicographic subarrays of multidimensional arrays"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an array");
  g->add_option("kind", gen.kind, "random|increasing|lex|block-g|block-h|f2-lower")->required();
  g->add_option("--n", gen.n, "Size parameter for block-g, block-h, f2-lower");
  g->add_option("--dims", gen.dims, "Comma-separated sizes");
  g->add_option("--sigma", gen.sigma, "Coordinate priority, e.g. 2,1");
  g->add_option("--signs", gen.signs, "Signs, e.g. -,+");
  g->add_option("--seed", gen.seed, "Seed for randomized generators");
  g->add_option("--format", gen.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  g->add_option("--out", gen.out, "Output path (stdout if omitted)");

  std::string file, what;
  auto* c = app.add_subcommand("check", "Check a property of an array file");
  c->add_option("file", file)->required();
  c->add_option("what", what, "monotone|inconsistent|lex-type|increasing")->required();

  std::string algo, restricted_out;
  std::size_t n = 0, t = 0;
  auto* e = app.add_subcommand("extract", "Run an extraction procedure");
  e->add_option("file", file)->required();
  e->add_option("--algo", algo, "monotone2d|inconsistent|monotone|monotone3d|lex2d|lex3d|lex|pipeline")->required();
  e->add_option("--n", n)->required();
  e->add_option("--t", t, "Second size for monotone2d (defaults to n)");
  e->add_option("--restricted-out", restricted_out, "Write the extracted subarray here");

  std::string construction;
  std::optional<std::uint64_t> max_candidates;
  std::optional<double> max_seconds;
  auto* v = app.add_subcommand("verify", "Certify a construction by exhaustive search");
  v->add_option("--construction", construction)->required();
  v->add_option("--n", n)->required();
  v->add_option("--max-candidates", max_candidates);
  v->add_option("--max-seconds", max_seconds);

  std::string shape, kind, sigma, signs;
  auto* s = app.add_subcommand("search", "Exhaustive subgrid search");
  s->add_option("file", file)->required();
  s->add_option("--shape", shape)->required();
  s->add_option("--kind", kind, "lex|monotone")->required();
  s->add_option("--sigma", sigma);
  s->add_option("--signs", signs);
  s->add_option("--max-candidates", max_candidates);
  s->add_option("--max-seconds", max_seconds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g->parsed()) return cmd_gen(gen);
    if (c->parsed()) return cmd_check(file, what);
    if (e->parsed()) return cmd_extract(file, algo, n, t, restricted_out);
    if (v->parsed()) return cmd_verify(construction, n, make_budget(max_candidates, max_seconds));
    if (s->parsed()) return cmd_search(file, shape, kind, sigma, signs, make_budget(max_candidates, max_seconds));
  } catch (const FormatError& err) {
    std::cerr << "format error: " << err.what() << "\n";
    return 2;
  } catch (const InvalidArray& err) {
    std::cerr << "invalid array: " << err.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& err) {
    std::cerr << "budget exceeded: " << err.what() << "\n";
    return 4;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const PreconditionError& err) {
    std::cerr << "precondition: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
