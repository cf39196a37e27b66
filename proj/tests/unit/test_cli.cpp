#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QLOOP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const std::string& args) {
  Run r = run(args + " --format json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("qchar fundamental emits the D4 polynomial as JSON") {
  auto j = json_of("qchar fundamental --type D4 --node 3 --shift 0");
  CHECK(j["terms"] == 28);
  CHECK(j["dimension"] == 29);
  int twos = 0;
  for (const auto& t : j["qchar"]["terms"]) twos += t["c"] == 2;
  CHECK(twos == 1);
}

TEST_CASE("text and LaTeX renderings") {
  Run t = run("sl2 kr --k 1 --s 0");
  CHECK(t.code == 0);
  CHECK(t.out.find("Y[1,0] + Y[1,2]^-1") != std::string::npos);
  Run l = run("sl2 kr --k 1 --s 0 --format latex");
  CHECK(l.code == 0);
  CHECK(l.out.find("Y_{1,q^{2}}^{-1}") != std::string::npos);
}

TEST_CASE("subcommands answer in JSON") {
  CHECK(json_of("rep roots --type A3")["roots"].size() == 6);
  auto e = json_of("rep euler --type D4 --beta 1,1,2,1 --nu 0,0,1,0");
  CHECK(e["euler"] == 2);
  CHECK(json_of("cluster enumerate --type A3 --level 1")["clusters"].size() == 14);
  CHECK(json_of("cluster classify --type A2 --level 2")["cluster_type"] == "D4");
  CHECK(json_of("sl2 ybe --u 3 --v 5 --q 2")["pass"] == true);
  CHECK(json_of("verify l1 --type A2")["pass"] == true);
  CHECK(json_of("verify tsystem --type A2 --kmax 2")["pass"] == true);
  auto f = json_of("cluster factor --type A3 --monomial [[1,0,1],[2,3,1],[3,0,1]]");
  CHECK(f["factors"].size() == 1);
  CHECK(json_of("qchar standard --type A1 --w [[1,0,1],[1,2,1]]")["qchar"]["terms"].size() == 4);
  CHECK(json_of("qchar truncated --type D4 --beta 1,1,1,1")["qchar"]["terms"].size() == 9);
}

TEST_CASE("exit codes") {
  CHECK(run("qchar fundamental --type Z4 --node 1 --shift 0").code == 2);
  CHECK(run("sl2 ybe --u 4 --v 1 --q 2").code == 2);
  CHECK(run("qchar fundamental --type A3 --node 1").code == 2);
  CHECK(run("cluster enumerate --type A3 --level 1 --seed-cap 3").code == 2);
  CHECK(run("verify l1 --type A2").code == 0);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("truncated q-characters need a root or a monomial") {
  CHECK(run("qchar truncated --type D4").code == 2);
  CHECK(run("qchar truncated --type A3 --beta 1,1,0 --monomial [[1,0,1]]").code == 2);
  // Y_{1,0} Y_{2,3} is the image of z[alpha_1]; M[alpha_1] = S_1 has two subrepresentations.
  CHECK(json_of("qchar truncated --type A3 --monomial [[1,0,1],[2,3,1]]")["qchar"]["terms"].size() == 2);
}
