#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

std::string cache_file() {
  static const auto dir = std::filesystem::temp_directory_path() / "takiff-cli-test";
  std::filesystem::create_directories(dir);
  return (dir / "kl.cache").string();
}

// Runs the CLI with a private cache; stderr is merged into out when `merge` is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = "TAKIFF_CACHE='" + cache_file() + "' " + env + " '" TAKIFF_CLI "' " + args +
                          (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("documented invocations") {
  CHECK(run("partition --type A2 --chi -1,-1").out == "2\n");
  CHECK(run("partition --type A2 --chi -1,-1 --colours 2").out == "6\n");
  auto red = run("reduce --type A2 --mu 1,-1");
  CHECK(red.status == 0);
  CHECK(red.out.find("w = 1\n") != std::string::npos);
  CHECK(red.out.find("levi = A1\n") != std::string::npos);
  auto m = run("mult --type A1 --lambda 0 --mu 0 --lambda2 -2 --mu2 0");
  CHECK(m.status == 0);
  CHECK(m.out == "2\n");
  CHECK(run("kl --type A3 --x 2 --w 2132").out == "1 + q\n");
  CHECK(run("series --type A1 --lambda 0 --mu 0 --height 4").out == "0\t1\n-2\t2\n-4\t1\n-6\t1\n-8\t1\n");
  CHECK(run("mult --type B2 --lambda 1,0 --mu 0,0 --lambda2 -1,-2 --mu2 0,0 --explain").out.find("levi = B2") !=
        std::string::npos);
}

TEST_CASE("exit codes and diagnostics") {
  auto bad = run("mult --type A2 --lambda 1,x --mu 0,0 --lambda2 0,0", true);
  CHECK(bad.status == 2);
  CHECK(bad.out.find("column 3") != std::string::npos);
  auto arity = run("reduce --type A2 --mu 1", true);
  CHECK(arity.status == 2);
  CHECK(arity.out.find("expected 2 coroot coordinates") != std::string::npos);
  CHECK(run("reduce --type Q2 --mu 1").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("partition --type A2").status == 2);
  CHECK(run("--height -1 partition --type A2 --chi 0,0").status == 2);
  CHECK(run("kl --type A2 --x 4 --w e").status == 2);
  auto nondominant = run("char --type A2 --lambda -1,0 --kind weyl", true);
  CHECK(nondominant.status == 1);
  CHECK(nondominant.out.find("dominant") != std::string::npos);
}

TEST_CASE("height from the environment") {
  CHECK(run("char --type A1 --lambda 0 --kind verma", false, "TAKIFF_HEIGHT=2").out == "-2a1\t1\n-a1\t1\n0\t1\n");
  CHECK(run("char --type A1 --lambda 0 --kind verma --height 1", false, "TAKIFF_HEIGHT=2").out == "-a1\t1\n0\t1\n");
}

TEST_CASE("json output is a single canonical document") {
  for (const char* args : {"partition --type A2 --chi -1,-1", "reduce --type B2 --mu 1,-1",
                           "mult --type A2 --lambda 0,0 --mu 1,-1 --lambda2 -2,-2 --mu2 1,-1",
                           "series --type A2+T1 --lambda '0,0;1/2' --mu '0,1;3' --height 3",
                           "char --type B2 --lambda 1,0 --kind simple --height 4", "kl --type B2 --x e --w 1212"}) {
    const std::string line = args;
    CAPTURE(line);
    auto r = run("--json " + line);
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
  }
  auto m = nlohmann::json::parse(run("--json mult --type A1 --lambda 0 --mu 0 --lambda2 -2 --mu2 0").out);
  CHECK(m["value"] == 2);
  CHECK(m["nu2"] == nlohmann::json::array({"-2"}));
}

TEST_CASE("cache subcommand") {
  run("cache clear");
  auto empty = nlohmann::json::parse(run("--json cache stats").out);
  CHECK(empty["records"] == 0);
  run("kl --type A3 --x e --w 2132");
  auto filled = nlohmann::json::parse(run("--json cache stats").out);
  CHECK(filled["records"].get<int>() > 0);
  // A second run reads the persisted records and adds nothing.
  run("kl --type A3 --x e --w 2132");
  CHECK(nlohmann::json::parse(run("--json cache stats").out)["bytes"] == filled["bytes"]);
  CHECK(nlohmann::json::parse(run("--json cache clear").out)["removed"] == true);
  CHECK(run("cache purge").status == 2);
}

TEST_CASE("selftest reports every criterion") {
  auto r = run("--json selftest");
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["criteria"].size() == 8);
  bool all = true;
  for (const auto& c : doc["criteria"]) all = all && c["passed"].get<bool>();
  CHECK(doc["passed"] == all);
  CHECK(r.status == (all ? 0 : 1));
}
