#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cuntz/cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cuntz::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CUNTZ_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_binary(const std::string& args) {
  std::string command = std::string(CUNTZ_BINARY) + " " + args + " >/dev/null 2>&1";
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval subcommand") {
  auto r = run_cli({"eval", "--n", "2", "--reduce", "S[1]S[1]'+S[2]S[2]'"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run_cli({"eval", "--n", "2", "S[1]S[1]'+S[2]S[2]'"});
  CHECK(r.out == "S[1]S[1]' + S[2]S[2]'\n");
  r = run_cli({"eval", "--n", "2", "S[3]"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 1, column 3: index exceeds rank 2") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"eval", "S[1]"}).code == 2);
  CHECK(run_cli({"eval", "--n", "1", "1"}).code == 2);
  CHECK(run_cli({"check", "prop7", "--n", "2"}).code == 2);
  CHECK(run_cli({"check", "all", "--n", "2", "--mutate", "nothing"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"eval", "--n", "2", "S[1] / 0"}).code == 2);
}

TEST_CASE("eval of a statements file matches the golden output") {
  auto r = run_cli({"eval", "--n", "2", data("data/session.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/eval_session.txt")));
  r = run_cli({"eval", "--n", "2", "--reduce", data("data/session.txt")});
  CHECK(r.out == slurp(data("golden/eval_session_reduced.txt")));
}

TEST_CASE("file errors carry the line number") {
  auto r = run_cli({"eval", "--n", "2", data("data/bad_session.txt")});
  CHECK(r.code == 2);
  CHECK(r.out == "p = S[1]S[1]'\n");
  CHECK(r.err.find("bad_session.txt:parse error: line 3, column 14: expected ')'") != std::string::npos);
}

TEST_CASE("check reports match the golden output") {
  auto r = run_cli({"check", "all", "--n", "2", "--level", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/check_all_n2.txt")));
  r = run_cli({"check", "all", "--n", "3", "--level", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/check_all_n3.txt")));
  r = run_cli({"check", "prop8", "--n", "2", "--level", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/check_prop8_n2.json")));
  r = run_cli({"check", "prop6", "--n", "2", "--level", "1", "--mutate", "psi-unit-weight"});
  CHECK(r.code == 1);
  CHECK(r.out == slurp(data("golden/check_prop6_mutated.txt")));
}

TEST_CASE("json report schema") {
  auto r = run_cli({"check", "prop9", "--n", "2", "--level", "1", "--seed", "4", "--json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "check prop9");
  CHECK(doc["params"]["n"] == 2);
  CHECK(doc["params"]["level"] == 1);
  CHECK(doc["params"]["seed"] == 4);
  CHECK(doc["params"]["mutation"] == "none");
  CHECK(doc["verdict"] == "pass");
  REQUIRE(doc["witnesses"].is_array());
  REQUIRE_FALSE(doc["witnesses"].empty());
  for (const auto& w : doc["witnesses"]) {
    CHECK(w.contains("check"));
    CHECK(w.contains("claim"));
    CHECK(w["lhs"].is_string());
    CHECK(w["rhs"].is_string());
    CHECK(w["holds"] == true);
  }
  r = run_cli({"check", "all", "--n", "2", "--level", "1", "--json", "--mutate", "psi-weight"});
  CHECK(r.code == 1);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "fail");
  CHECK(doc["params"]["mutation"] == "psi-weight");
}

TEST_CASE("default levels") {
  auto r = run_cli({"check", "prop6", "--n", "3", "--json"});
  CHECK(nlohmann::json::parse(r.out)["params"]["level"] == 1);
  r = run_cli({"check", "prop6", "--n", "2", "--json"});
  CHECK(nlohmann::json::parse(r.out)["params"]["level"] == 2);
}

TEST_CASE("repl") {
  auto r = run_cli({"repl", "--n", "2"}, "let a = S[1]\na a'\nlet a = 2\nS[5]\nphi(a a')\n:q\n1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "a = S[1]\nS[1]S[1]'\n1/2\n");
  CHECK(r.err.find("already bound") != std::string::npos);
  CHECK(r.err.find("index exceeds rank") != std::string::npos);
}

TEST_CASE("binary exit statuses") {
  CHECK(run_binary("check all --n 2 --level 2") == 0);
  CHECK(run_binary("check all --n 2 --level 2 --mutate psi-weight") == 1);
  CHECK(run_binary("check all --n 2 --level 2 --mutate phi-drop-term") == 1);
  CHECK(run_binary("eval --n 2 'S[3]'") == 2);
  CHECK(run_binary("bogus") == 2);
}

}
