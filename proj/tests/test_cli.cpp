#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "linkmu/generators.hpp"
#include "linkmu/plane_graph.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LINKMU_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("linkmu_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("mu on a generated 4-cycle, full report") {
  const auto r = run("mu --gen cycle 4 --method all --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"mu_trace", "mu_nullity", "mu_regions", "mu_coloring", "mu_tutte"}) CHECK(j[key] == 2);
  CHECK(j["agree"] == true);
}

TEST_CASE("mu single methods") {
  CHECK(run("mu --gen grid 1 1").out == "1\n");
  for (const char* m : {"trace", "nullity", "regions", "coloring", "tutte"}) {
    CAPTURE(m);
    const auto r = run(std::string("mu --gen complete4 --method ") + m);
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
  }
  CHECK(run("mu --gen grid 4 4 --method tutte").code == 2);
  CHECK(run("mu --gen grid 4 4 --method tutte --max-edges 24").out == "4\n");
}

TEST_CASE("mu input errors exit 2") {
  CHECK(run("mu nonexistent.pg").code == 2);
  CHECK(run("mu").code == 2);
  CHECK(run("mu --gen nosuch 3").code == 2);
  CHECK(run("mu --gen cycle x").code == 2);
  CHECK(run("mu --gen cycle 4 --method bogus").code == 2);
  const auto torus = temp_file("torus.pg", "pg v1\nedges 2\nv 0 : 0 2 1 3\n");
  CHECK(run("mu " + torus.string()).code == 2);
  const auto junk = temp_file("junk.pg", "hello\n");
  CHECK(run("mu " + junk.string()).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("gen writes a file that mu reads back, also via stdin") {
  const auto path = std::filesystem::temp_directory_path() / "linkmu_test_wheel.pg";
  CHECK(run("gen wheel 6 -o " + path.string()).code == 0);
  std::ifstream is(path);
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  CHECK(linkmu::parse_plane_graph(text) == linkmu::make_wheel(6));
  CHECK(run("gen wheel 6").out == text);
  CHECK(run("mu " + path.string()).out == run("mu --gen wheel 6").out);
  CHECK(run("mu - < " + path.string()).out == run("mu --gen wheel 6").out);
}

TEST_CASE("check examples") {
  const auto small = run("check --families cycles:3..4 --json");
  CHECK(small.code == 0);
  const auto j = nlohmann::json::parse(small.out);
  CHECK(j["instances"][0]["mu_trace"] == 1);
  CHECK(j["instances"][1]["mu_trace"] == 2);

  const auto empty = run("check --families empty --json");
  CHECK(empty.code == 0);
  const auto je = nlohmann::json::parse(empty.out);
  CHECK(je["instances"][0]["mu_nullity"] == 0);
  CHECK(je["all_agree"] == true);

  CHECK(run("check --families cycles:2..12,grids:2x2..5x5,theta:2..6,wheel:4..8,complete4 --random 50 --seed 7")
            .code == 0);
  CHECK(run("check --families hexagons:3").code == 2);
  CHECK(run("check --families cycles:9..2").code == 2);
}

TEST_CASE("same seed gives byte-identical reports") {
  const auto a = run("check --families theta:2..4 --random 10 --seed 3 --json");
  const auto b = run("check --families theta:2..4 --random 10 --seed 3 --json --jobs 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run("check --families theta:2..4 --random 10 --seed 4 --json").out);
}

TEST_CASE("colorings lists the kernel") {
  const auto r = run("colorings --gen cycle 4");
  CHECK(r.code == 0);
  std::set<std::string> lines;
  std::size_t start = 0;
  while (start < r.out.size()) {
    const auto nl = r.out.find('\n', start);
    lines.insert(r.out.substr(start, nl - start));
    start = nl + 1;
  }
  CHECK(lines == std::set<std::string>{"0000", "1010", "0101", "1111"});
  CHECK(r.out.substr(0, 5) == "0000\n");
  CHECK(run("colorings --gen grid 1 1").out == "0\n1\n");
}

TEST_CASE("simplify, info and bench") {
  const auto s = run("simplify --gen grid 3 3 --json --log");
  CHECK(s.code == 0);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["crossings_after"] == 0);
  CHECK(js["free_circles"] == js["mu_trace"]);
  CHECK(js["log"].size() == js["moves"]);

  const auto log = nlohmann::json::parse(run("simplify --gen path 2 --log").out);
  REQUIRE(log.size() == 1);
  CHECK(log[0]["move"] == "R1_remove");

  const auto info = nlohmann::json::parse(run("info --gen cycle 4 --json").out);
  CHECK(info["crossing_count"] == 4);

  const auto bench = run("bench --grids 1,10 --repeat 2");
  CHECK(bench.code == 0);
  std::vector<nlohmann::json> rows;
  std::size_t start = 0;
  while (start < bench.out.size()) {
    const auto nl = bench.out.find('\n', start);
    rows.push_back(nlohmann::json::parse(bench.out.substr(start, nl - start)));
    start = nl + 1;
  }
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["n"] == 1);
  CHECK(rows[0]["nullity"] == 1);
  CHECK(rows[2]["n"] == 10);
  CHECK(rows[2]["nullity"] == rows[3]["nullity"]);
  CHECK(rows[2]["nullity"] == nlohmann::json::parse(run("mu --gen grid 10 10 --json").out)["mu_trace"]);
}
