// Copyright 2026 The Octa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "octa/laurent.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + OCTA_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(OCTA_DATA_DIR) + "/" + name; }

// Tags balance and every element closes.
bool well_formed_xml(const std::string& s) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = s.find('<', pos)) != std::string::npos) {
    std::size_t end = s.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = s.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    stack.push_back(tag.substr(0, tag.find(' ')));
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("somos") {
  Run r = run("somos --k 4 --a 1 --b 2 --n 10");
  CHECK(r.status == 0);
  CHECK(r.out == "1 1 1 1 2 3 7 23 59 314\n");
  CHECK(run("somos --k 5 --a 1 --b 2 --n 9").out == "1 1 1 1 1 2 3 5 11\n");
}

TEST_CASE("eval") {
  Run r = run("eval --height " + data("running.json") + " --apex 3 1 0");
  REQUIRE(r.status == 0);
  octa::LaurentPoly f = octa::parse_laurent(r.out);
  CHECK(f == octa::parse_laurent(
                 "a[3,0]*c[-1,0]*a[2,-1]*c[0,-1]*x[1,-2]*x[1,-1]^-1*x[1,1]"
                 " + a[3,0]*c[-1,0]*b[1,0]*d[1,-2]*x[1,0]^-1*x[0,-1]*x[2,-1]*x[1,-1]^-1*x[1,1]"
                 " + b[1,2]*d[1,-2]*a[1,0]*c[-1,0]*x[0,-1]*x[0,1]*x[0,0]^-1*x[2,0]*x[1,0]^-1"
                 " + b[1,2]*d[1,-2]*b[0,1]*d[0,-1]*x[-1,0]*x[0,0]^-1*x[2,0]"));
  CHECK(run("eval --apex 0 0 0").out == "x[0,0]\n");
  Run js = run("eval --apex 1 0 1 --format json");
  REQUIRE(js.status == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["terms"] == 2);
}

TEST_CASE("validation errors exit 2") {
  CHECK(run("eval --apex 1 0 0").status == 2);
  CHECK(run("eval --apex -2 0 0").status == 2);
  CHECK(run("count --height no_such_file.json --apex 2 0 0").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("eval").status == 2);
  CHECK(run("eval --apex 2 0 0 --format dot").status == 2);
}

TEST_CASE("count") {
  CHECK(run("count --height " + data("fortress.json") + " --apex 2 0 0").out == "5\n");
  CHECK(run("count --height fortress --apex 3 1 0").out == "25\n");
  CHECK(run("count --apex 5 0 1 --method recurrence").out == "32768\n");
  CHECK(run("count --height blum --apex 3 0 1").out == "27\n");
  CHECK(run("count --apex 4 0 0", "OCTA_MAX_MATCHINGS=10").status == 2);
}

TEST_CASE("enumerate") {
  Run r = run("enumerate --height fortress --apex 3 1 0 --format json");
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 25);
  CHECK(j[0].contains("labels"));
  Run svg = run("enumerate --height fortress --apex 3 1 0 --format svg --index 3");
  CHECK(svg.status == 0);
  CHECK(well_formed_xml(svg.out));
  CHECK(run("enumerate --height fortress --apex 3 1 0 --format svg --index 25").status == 2);
}

TEST_CASE("graph formats") {
  Run svg = run("graph --height running --apex 3 1 0 --format svg");
  REQUIRE(svg.status == 0);
  CHECK(well_formed_xml(svg.out));
  CHECK(svg.out.find("stroke-dasharray") != std::string::npos);
  Run js = run("graph --height douglass --apex 4 0 0 --format json");
  REQUIRE(js.status == 0);
  CHECK(nlohmann::json::parse(js.out).contains("faces"));
  Run dot = run("graph --apex 2 0 0 --format dot");
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  Run text = run("graph --apex 2 0 0");
  CHECK(text.out.find("check ok") != std::string::npos);
}

TEST_CASE("sampling is deterministic per seed") {
  Run a = run("sample --height fortress --apex 4 0 0 --seed 7 --count 5 --format json");
  Run b = run("sample --height fortress --apex 4 0 0 --seed 7 --count 5 --format json");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).size() == 5);
  Run c = run("sample --height fortress --apex 4 0 0 --seed 8 --count 5 --format json");
  CHECK(c.out != a.out);
  Run svg = run("sample --apex 3 0 1 --seed 1 --format svg");
  CHECK(well_formed_xml(svg.out));
}

TEST_CASE("output file") {
  std::string path = "octa_cli_test_output.txt";
  CHECK(run("somos --n 6 --output " + path).status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "1 1 1 1 2 3\n");
  std::remove(path.c_str());
}

TEST_CASE("verify") {
  Run r = run("verify main-theorem --family all --max-cone 10");
  CHECK(r.status == 0);
  CHECK(r.out.find(", PASS") != std::string::npos);
  Run js = run("verify recovery --family fortress --max-cone 10 --format json");
  CHECK(js.status == 0);
  CHECK(nlohmann::json::parse(js.out)["pass"] == true);
  CHECK(run("verify condensation --family aztec --radius 0").status == 0);
  CHECK(run("verify renewal --family blum --instances 20").status == 0);
  CHECK(run("verify heights --family douglass").status == 0);
  CHECK(run("verify sampler --family fortress --draws 4000").status == 0);
}
