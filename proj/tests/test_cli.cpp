#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gridlex/constructions.hpp"
#include "gridlex/io.hpp"
#include "support.hpp"

using namespace gridlex;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("gridlex_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string out = path("stdout.txt");
  const std::string cmd = std::string("\"") + GRIDLEX_CLI_PATH + "\" " + args + " > \"" + out + "\" 2> \"" +
                          path("stderr.txt") + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }

}  // namespace

TEST_CASE("gen") {
  REQUIRE(run("gen f2-lower --n 3 --out " + path("f2.json")).code == 0);
  CHECK(read_array_file(path("f2.json")) == gen_f2_lower(3));

  auto r = run("gen lex --dims 3,3 --sigma 1,2 --signs +,+ --format text");
  CHECK(r.code == 0);
  CHECK(r.out == "2 5 8\n1 4 7\n0 3 6\n");

  CHECK(run("gen increasing --dims 2,2 --seed 7 --out " + path("a.json")).code == 0);
  CHECK(run("gen increasing --dims 2,2 --seed 7 --out " + path("b.json")).code == 0);
  CHECK(slurp(path("a.json")) == slurp(path("b.json")));

  CHECK(run("gen random --dims 3,3").code == 2);
  CHECK(run("gen lex --dims 3,3 --sigma 1,1").code == 2);
  CHECK(run("gen block-g --n 2").code == 2);
  CHECK(run("gen nonsense --n 3").code == 2);
  CHECK(run("gen random --dims 2,2,2 --seed 1 --format text").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
}

TEST_CASE("check") {
  REQUIRE(run("gen lex --dims 3,3 --sigma 2,1 --signs -,+ --out " + path("lex.json")).code == 0);
  auto r = run("check " + path("lex.json") + " lex-type");
  CHECK(r.code == 0);
  CHECK(r.out.find("(2,1)") != std::string::npos);

  write("third.txt", "6 7 8\n5 4 3\n0 1 2\n");
  CHECK(run("check " + path("third.txt") + " monotone").code == 1);
  CHECK(run("check " + path("third.txt") + " inconsistent").code == 0);
  CHECK(run("check " + path("third.txt") + " increasing").code == 1);

  write("bad.json", "{\"dims\": [2,2], \"ranks\": [0,1");
  CHECK(run("check " + path("bad.json") + " monotone").code == 2);
  write("dup.json", "{\"dims\": [2,2], \"ranks\": [0,1,1,3]}");
  CHECK(run("check " + path("dup.json") + " monotone").code == 3);
  CHECK(run("check " + path("lex.json") + " shiny").code == 2);
}

TEST_CASE("extract") {
  REQUIRE(run("gen increasing --dims 7,7 --seed 11 --out " + path("inc.json")).code == 0);
  auto r = run("extract " + path("inc.json") + " --algo lex2d --n 3 --restricted-out " + path("sub.json"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "found");
  CHECK(j["kind"] == "lex");
  const auto a = read_array_file(path("inc.json"));
  Subgrid s{j["subgrid"]["indices"].get<std::vector<std::vector<Index>>>()};
  const LexType lt{j["type"]["sigma"].get<std::vector<int>>(), j["type"]["signs"].get<std::vector<int>>()};
  CHECK(ref::is_lex(restrict(a, s), lt));
  CHECK(run("check " + path("sub.json") + " lex-type").code == 0);

  REQUIRE(run("gen f2-lower --n 3 --out " + path("f2.json")).code == 0);
  r = run("extract " + path("f2.json") + " --algo lex2d --n 3");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["status"] == "failed");

  REQUIRE(run("gen lex --dims 4,4,4 --sigma 1,2,3 --out " + path("lex3.json")).code == 0);
  r = run("extract " + path("lex3.json") + " --algo monotone --n 2");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["pattern"] == nlohmann::json::array({1, 1, 1}));

  REQUIRE(run("gen random --dims 5,5 --seed 2 --out " + path("rnd.json")).code == 0);
  CHECK(run("extract " + path("rnd.json") + " --algo lex2d --n 2").code == 2);
  CHECK(run("extract " + path("rnd.json") + " --algo bogus --n 2").code == 2);
}

TEST_CASE("verify and search") {
  auto r = run("verify --construction f2 --n 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks pass") != std::string::npos);
  CHECK(run("verify --construction f2 --n 6 --max-candidates 10").code == 4);

  REQUIRE(run("gen f2-lower --n 3 --out " + path("f2.json")).code == 0);
  r = run("search " + path("f2.json") + " --shape 3,3 --kind lex");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["status"] == "absent");
  r = run("search " + path("f2.json") + " --shape 2,2 --kind lex --sigma 1,2");
  CHECK(r.code == 0);
  CHECK(run("search " + path("f2.json") + " --shape 6,6 --kind monotone").code == 0);

  REQUIRE(run("gen f2-lower --n 5 --out " + path("f5.json")).code == 0);
  CHECK(run("search " + path("f5.json") + " --shape 5,5 --kind lex --max-candidates 10").code == 4);
  CHECK(run("search " + path("f2.json") + " --shape 7,7 --kind lex").code == 2);
}
