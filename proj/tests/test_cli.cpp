/*
 * Copyright 2026 The pnspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string("\"") + PNS_CLI + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;)
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("\"") + PNS_DATA_DIR + "/" + name + "\"";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sibley") {
  const auto r = run("sibley " + data("eps0.3.df") + " " + data("eps0.df"));
  CHECK(r.code == 0);
  CHECK(r.out == "0.3\n");
}

TEST_CASE("tau") {
  const auto r = run("tau --tnorm min " + data("eps2.df") + " " + data("eps3.df"));
  CHECK(r.code == 0);
  CHECK(r.out == "DF v1\n5 1\ninf 1\n");
  CHECK(run("tau --tnorm min --star " + data("eps2.df") + " " + data("eps3.df")).out ==
        "DF v1\n5 1\ninf 1\n");
  CHECK(run("tau --tnorm nope " + data("eps2.df") + " " + data("eps3.df")).code == 1);
}

TEST_CASE("dist") {
  CHECK(run("dist --norm l2 --basis \"1 0\" --point \"3 4\"").out == "4\n");
  CHECK(run("dist --norm linf --basis \"1 1\" --point \"1 0\"").out == "0.5\n");
  CHECK(run("dist --norm l1 --basis \"1 0\" --basis \"2 0\" --point \"1 0\"").code == 1);
}

TEST_CASE("quotient-norm") {
  CHECK(run("quotient-norm --space " + data("simple-r2.json") + " --point \"3 4\"").out ==
        "DF v1\n4 1\ninf 1\n");
  const auto c = run("quotient-norm --space " + data("c00-linf.json") + " --point 1");
  CHECK(c.code == 0);
  CHECK(c.out.starts_with("DF v1\n0.00097560975609756"));
}

TEST_CASE("run is deterministic and well formed") {
  const auto tmp = std::filesystem::temp_directory_path();
  const auto a = tmp / "pnspace_cli_a.json";
  const auto b = tmp / "pnspace_cli_b.json";
  const std::string args = "run --space " + data("simple-r2.json") +
                           " --suite axioms,metric-oracle --samples 100 --seed 5 --out ";
  CHECK(run(args + "\"" + a.string() + "\"").code == 0);
  CHECK(run(args + "\"" + b.string() + "\"").code == 0);
  const std::string ta = slurp(a), tb = slurp(b);
  CHECK_FALSE(ta.empty());
  CHECK(ta == tb);
  const auto j = nlohmann::json::parse(ta);
  CHECK(j["report_version"] == 1);
  CHECK(j["tool"] == "pnspace");
  CHECK(j["verdict"] == "pass");
  CHECK(j["config"]["seed"] == 5);
  for (const auto& r : j["reports"]) {
    CHECK(r.contains("suite"));
    CHECK(r.contains("check"));
    CHECK(r["elapsed_ms"] == 0);
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("failing suite exits 1") {
  const auto r = run("run --space " + data("squared-r2.json") +
                     " --suite axioms --samples 100 --seed 1");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "fail");
}

TEST_CASE("usage errors") {
  CHECK(run("run --space " + data("simple-r2.json")).code != 0);
  CHECK(run("run --space " + data("simple-r2.json") + " --seed 1 --suite nope").code == 1);
  CHECK(run("sibley /nonexistent.df " + data("eps0.df")).code != 0);
}

}  // TEST_SUITE
