#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "uav/format.hpp"
#include "uav/mechanisms.hpp"
#include "uav/profile_io.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(UAV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult res;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("place on a built-in example matches the library") {
  const CommandResult r =
      run_cli("place --example percentile-14user --mechanism median");
  CHECK(r.exit_code == 0);
  const uav::Placement expected =
      uav::median_mechanism(uav::example_profile("percentile-14user"));
  const std::string want = "{\"x\": " + uav::format_double(expected.x) +
                           ", \"y\": " + uav::format_double(expected.y) +
                           ", \"z0\": " + uav::format_double(expected.z) + "}\n";
  CHECK(r.output == want);
}

TEST_CASE("verify-sp flags the non-strategyproof baseline with exit 2") {
  const CommandResult r =
      run_cli("verify-sp --example intro-2user --mechanism wmean-baseline");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("violations=") != std::string::npos);
  CHECK(r.output.find("violations=0") == std::string::npos);

  const CommandResult ok =
      run_cli("verify-sp --example intro-2user --mechanism median");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("violations=0") != std::string::npos);
}

TEST_CASE("ratio subcommand reports the bound") {
  const CommandResult r =
      run_cli("ratio --example obnoxious-2user --mechanism corner-w --alpha 2,4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("violations=0") != std::string::npos);
  CHECK(r.output.find("max_ratio=") != std::string::npos);
}

TEST_CASE("simulate is byte-identical across runs of the same seed") {
  const std::string args =
      "simulate --experiment fig2 --n-list 2,5 --trials 25 --seed 7";
  const CommandResult a = run_cli(args);
  const CommandResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("experiment,mechanism,", 0) == 0);
}

TEST_CASE("invalid profiles exit 1 and name the offending field") {
  const CommandResult missing = run_cli("place --profile /nonexistent.json "
                                        "--mechanism median");
  CHECK(missing.exit_code == 1);

  const std::string bad = "/tmp/uav_bad_profile.json";
  std::ofstream(bad) << R"({"arena": {"A":1,"B":1,"z0":0,"alpha":2},
                            "users": [{"x": 5, "y": 0, "w": 1}]})";
  const CommandResult r =
      run_cli("place --profile " + bad + " --mechanism median");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("/users/0/x") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("place --example intro-2user").exit_code == 1);  // no mechanism
  CHECK(run_cli("fly").exit_code == 1);
  CHECK(run_cli("place --example intro-2user --mechanism median --bogus")
            .exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("lemmas subcommand prints margins") {
  const CommandResult r = run_cli("lemmas --samples 2000 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pass=true") != std::string::npos);
}
