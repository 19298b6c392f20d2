#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LCA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("bracket command") {
  CHECK(run("bracket x x --format table").out == "(2λ+∂)x\n");
  CHECK(run("bracket 1 1 --format table").out == "0\n");
  CHECK(run("bracket x 1 --format table").out == "λ+∂\n");
  Run bad = run("bracket 'x^' x");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("position") != std::string::npos);
}

TEST_CASE("growth and schurweyl commands") {
  CHECK(run("growth --plus 3,1 --format table").out == "4\n");
  CHECK(run("growth --weight 1,2 --format table").out == "infinite\n");
  Run sw = run("schurweyl --M 3 -N 12 --format table");
  CHECK(sw.code == 0);
  CHECK(sw.out == "identity holds: true\n");
}

TEST_CASE("char command") {
  Run r = run("char --plus 2,1 -N 8 --oracle");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"matches_oracle\": true") != std::string::npos);
  CHECK(r.out.find("\"formula\"") != std::string::npos);
}

TEST_CASE("span command") {
  Run r = run("span --plus 1,1 -N 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"matches_character\": true") != std::string::npos);
  CHECK(run("span --plus 1 --set Bogus").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("growth --plus 1 --format xml").code == 2);
  CHECK(run("char").code == 2);
}

TEST_CASE("deterministic output") {
  std::string args = "selftest --suite conformal --seed 7 --samples 5";
  CHECK(run(args).out == run(args).out);
}
