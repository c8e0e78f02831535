#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CRITARROW_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kCone = "--cone '1,0,0;0,1,0;1,1,2'";

}  // namespace

TEST_CASE("analyze prints json") {
  const Run r = run("analyze " + kCone + " --w 1,1,1");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim_tau"] == 1);
  CHECK(j["d_prime"] == 5);
  CHECK(j["crit"]["1"] == nlohmann::json::parse("[[-1,0,1],[-1,1,0]]"));
}

TEST_CASE("analyze text format") {
  const Run r = run("analyze " + kCone + " --w 1,2,2 --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("dim tau") != std::string::npos);
  CHECK(r.out.find("(2,0,-1) (4,0,-2)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("analyze --cone '1,0;0,x' --w 1,1").code == 2);
  CHECK(run("analyze " + kCone + " --w -1,0,0").code == 2);
  CHECK(run("analyze --cone '2,0;0,1' --w 1,1").code == 2);
  CHECK(run("analyze " + kCone + " --w 1,1,1 --max-box-points 10").code == 3);
  CHECK(run("bogus").code != 0);
}

TEST_CASE("output does not depend on jobs or kernel") {
  const std::string base = "analyze --cone '1,0,0,0;0,1,0,0;1,3,3,0;4,3,1,4' --w 4,4,2,3";
  const Run a = run(base + " --jobs 1 --kernel scalar");
  const Run b = run(base + " --jobs 4 --kernel avx2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run(base, "CRITARROW_JOBS=3 CRITARROW_KERNEL=scalar").out);
}

TEST_CASE("quotient subcommand") {
  const Run r = run("quotient --group 14:1,9,11 --w 1/2,1/2,1/2");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["group_order"] == 14);
  CHECK(j["classification"]["label"] == "case5");
  CHECK(j["volume"]["vol"] == "2/7");
  CHECK(j["analysis"]["level_one_found"] == "no");
  CHECK(j["analysis"]["dim_tau"] == 1);
  CHECK(run("quotient --group 14:1,9,11 --w 1/3,0,0").code == 2);
}

TEST_CASE("scan subcommand") {
  const Run r = run("scan --dim 3 --fixed 1,0,0 --free 2 --range 0..2 --le 2,3");
  CHECK(r.code == 0);
  // records first, summary on the last line
  const std::string body = r.out.substr(0, r.out.find_last_not_of('\n') + 1);
  const auto summary = nlohmann::json::parse(body.substr(body.rfind('\n') + 1));
  CHECK(summary["errors"] == 0);
  CHECK(summary["records"].get<int>() > 0);
  CHECK(summary["max_dim_tau"] == 1);
  CHECK(summary["records"] == 15);
  CHECK(summary["total_tuples"] == 729);
}

TEST_CASE("full 0..3 scan") {
  const Run r = run("scan --dim 3 --fixed 1,0,0 --free 2 --range 0..3 --le 2,3 --jobs 2");
  CHECK(r.code == 0);
  const std::string body = r.out.substr(0, r.out.find_last_not_of('\n') + 1);
  const auto summary = nlohmann::json::parse(body.substr(body.rfind('\n') + 1));
  CHECK(summary["errors"] == 0);
  CHECK(summary["records"] == 328);
  CHECK(summary["max_dim_tau"] == 1);
}
