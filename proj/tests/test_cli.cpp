#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "urykat/io.hpp"

using namespace urykat;
using namespace urykat::testing;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/urykat_cli_out.json";
  const std::string command =
      std::string(URYKAT_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream text;
  text << in.rdbuf();
  result.stdout_text = text.str();
  return result;
}

std::string write_temp(const std::string& name, const Json& j) {
  std::string path = "/tmp/" + name;
  write_json_file(path, j);
  return path;
}

}  // namespace

TEST_CASE("validate: exit 0 on a valid space, 1 with a witness on a bad one") {
  auto good = write_temp("cli_good.json", space_to_json(*singleton()));
  RunResult ok = run_cli("validate " + good);
  CHECK(ok.exit_code == 0);
  Json report = Json::parse(ok.stdout_text);
  CHECK(report.at("pass").get<bool>());

  Json bad = Json{{"points", {"a", "b", "c"}},
                  {"dist",
                   {{"0", "1", "3"}, {"1", "0", "1"}, {"3", "1", "0"}}},
                  {"pseudometric", false}};
  auto bad_path = write_temp("cli_bad.json", bad);
  RunResult fail = run_cli("validate " + bad_path);
  CHECK(fail.exit_code == 1);
  Json fail_report = Json::parse(fail.stdout_text);
  CHECK(!fail_report.at("pass").get<bool>());
  CHECK(fail_report.at("result").at("violation") == "TriangleViolation");
  CHECK(fail_report.at("result").at("witness") == Json::array({"a", "b", "c"}));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("validate /nonexistent.json").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("katetov extend reproduces the worked path example") {
  auto path = write_temp("cli_path.json", space_to_json(*path3()));
  RunResult r = run_cli("katetov extend --space " + path + " --subset a,c --values 2,1");
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.stdout_text);
  CHECK(report.at("result").at("values") == Json::array({"2", "2", "1"}));
}

TEST_CASE("iso group emits cycle notation") {
  auto path = write_temp("cli_path2.json", space_to_json(*path3()));
  RunResult r = run_cli("iso group " + path);
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.stdout_text);
  CHECK(report.at("result").at("order") == 2);
  auto elements = report.at("result").at("elements");
  CHECK(elements == Json::array({"()", "(a c)"}));
}

TEST_CASE("iso nbhd filters by strict displacement") {
  auto path = write_temp("cli_path3.json", space_to_json(*path3()));
  RunResult r = run_cli("iso nbhd " + path + " --anchor a:1");
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.stdout_text);
  CHECK(report.at("result").at("members") == Json::array({"()"}));
}

TEST_CASE("approximant build then lemma1 end to end") {
  auto seed = write_temp("cli_seed.json", space_to_json(*singleton()));
  RunResult build = run_cli("--grid 1:2 --k 1 --rounds 3 approximant build --seed " + seed +
                            " -o /tmp/cli_approx.json");
  REQUIRE(build.exit_code == 0);
  Json report = Json::parse(build.stdout_text);
  CHECK(report.at("result").at("witness_k") == 1);

  RunResult check = run_cli("--k 1 approximant check /tmp/cli_approx_result.json");
  CHECK(check.exit_code == 2);  // missing file is a parse error

  // Rerun the check against the emitted approximant.
  Json approx = report.at("result");
  approx.erase("points");
  write_json_file("/tmp/cli_approx_payload.json", approx);
  RunResult check2 = run_cli("--k 1 approximant check /tmp/cli_approx_payload.json");
  CHECK(check2.exit_code == 0);

  RunResult lemma = run_cli("lemma1 --approximant /tmp/cli_approx_payload.json --targets x,p1 "
                            "--eps 1 --grid 1:2");
  // gamma needs a finer grid than 1/1 here, so the run reports the error code.
  CHECK(lemma.exit_code == 1);
  Json lemma_report = Json::parse(lemma.stdout_text);
  CHECK(lemma_report.at("error").at("code") == "NoAdmissibleGamma");
}

TEST_CASE("lemma1 via the CLI on a fine grid") {
  Json approx;
  approx["space"] = space_to_json(*path3());
  approx["grid"] = Json{{"q", 4}, {"cap", "4"}};
  approx["witness_k"] = 0;
  approx["provenance"] = Json::array();
  auto path = write_temp("cli_lemma1.json", approx);
  RunResult r = run_cli("lemma1 --approximant " + path + " --targets a,c --eps 1");
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.stdout_text);
  CHECK(report.at("result").at("gamma") == "1/4");
  CHECK(report.at("result").at("passed").get<bool>());
  CHECK(report.at("result").at("dropped_elements") == Json::array({"(a c)"}));
}

TEST_CASE("reports are byte-identical across reruns") {
  auto path = write_temp("cli_det.json", space_to_json(*l1_square()));
  RunResult first = run_cli("iso group " + path);
  RunResult second = run_cli("iso group " + path);
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
}
