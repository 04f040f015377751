#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "zonotopal/splines.hpp"

#ifndef ZONO_CLI_PATH
#error "ZONO_CLI_PATH must point at the built binary"
#endif

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int exit_code;
  std::string out;
};

int temp_counter = 0;

std::string write_temp(const std::string& contents) {
  const std::string path = "cli_test_input_" + std::to_string(temp_counter++) + ".json";
  std::ofstream out(path);
  out << contents;
  return path;
}

RunResult run_cli(const std::string& args, const std::string& input_json) {
  const std::string input = write_temp(input_json);
  const std::string cmd =
      std::string(ZONO_CLI_PATH) + " --input " + input + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

const std::string ones3 = R"({"dim": 1, "vectors": [[1],[1],[1]]})";
const std::string x3 = R"({"dim": 2, "vectors": [[1,0],[0,1],[1,1]]})";

}  // namespace

TEST_CASE("dspace report for the repeated-ones list") {
  const RunResult r = run_cli("dspace --basis", ones3);
  REQUIRE(r.exit_code == 0);
  const Json report = Json::parse(r.out);
  REQUIRE(report["command"] == "dspace");
  REQUIRE(report["result"]["dims"] == Json::array({1, 1, 1}));
  REQUIRE(report["result"]["total"] == 3);
  REQUIRE(report["result"]["basis"]["0"][0]["pretty"] == "1");
  REQUIRE(report["result"]["basis"]["1"][0]["pretty"] == "x");
  REQUIRE(report["result"]["basis"]["2"][0]["pretty"] == "x^2");
}

TEST_CASE("spline evaluation report") {
  const RunResult r = run_cli("spline eval --point 3", ones3);
  REQUIRE(r.exit_code == 0);
  const Json report = Json::parse(r.out);
  REQUIRE(report["result"]["value"] == "9/2");

  const RunResult piece = run_cli("spline piece --witness 2,1", x3);
  REQUIRE(piece.exit_code == 0);
  REQUIRE(Json::parse(piece.out)["result"]["polynomial"]["pretty"] == "y");

  // Face variant over the wire matches the library route.
  const RunResult face = run_cli("spline eval --point 1,-2 --face +--", x3);
  REQUIRE(face.exit_code == 0);
  {
    using namespace zonotopal;
    const VectorList list(2, {{1, 0}, {0, 1}, {1, 1}});
    const RegularFace f = face_from_signs(list, {1, -1, -1});
    const Rational expected = eval_TF(list, f, {Rational(1), Rational(-2)});
    REQUIRE(Json::parse(face.out)["result"]["value"] == to_string(expected));
  }
  REQUIRE(run_cli("spline eval --point 1,-2 --face ++-", x3).exit_code == 3);
}

TEST_CASE("exit codes follow the contract") {
  // Parse failures: malformed JSON, malformed options.
  REQUIRE(run_cli("matroid", "{not json").exit_code == 2);
  REQUIRE(run_cli("matroid", R"({"dim": 2, "vectors": []})").exit_code == 2);
  REQUIRE(run_cli("hilbert --ideal bogus", x3).exit_code == 2);
  REQUIRE(run_cli("spline eval --point 1,2,3", x3).exit_code == 2);

  // Precondition violations: non-spanning list, wall point, non-acute cone.
  REQUIRE(run_cli("matroid", R"({"dim": 2, "vectors": [[1,0],[2,0]]})").exit_code == 3);
  REQUIRE(run_cli("spline eval --point 1,1", x3).exit_code == 3);
  REQUIRE(run_cli("spline eval --point 1/2",
                  R"({"dim": 1, "vectors": [[1],[-1]]})")
              .exit_code == 3);

  // Nothing is written to stdout on failure.
  REQUIRE(run_cli("spline eval --point 1,1", x3).out.empty());
}

TEST_CASE("reports are deterministic and round-trip through the input echo") {
  const RunResult a = run_cli("verify --suite tutte", x3);
  const RunResult b = run_cli("verify --suite tutte", x3);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(Json::parse(a.out)["result"]["all_pass"] == true);

  const RunResult first = run_cli("matroid", x3);
  REQUIRE(first.exit_code == 0);
  const Json echoed = Json::parse(first.out)["input"];
  const RunResult second = run_cli("matroid", echoed.dump());
  REQUIRE(second.out == first.out);
}

TEST_CASE("betti and csbetti commands expose the grading conventions") {
  const RunResult betti = run_cli("betti --stratum geq=2", x3);
  REQUIRE(betti.exit_code == 0);
  const Json table = Json::parse(betti.out)["result"]["betti"];
  REQUIRE(table["entries"]["0"] == 1);
  REQUIRE(table["entries"]["2"] == 2);

  const RunResult cs = run_cli("csbetti", x3);
  REQUIRE(cs.exit_code == 0);
  const Json result = Json::parse(cs.out)["result"];
  REQUIRE(result["entries"]["6"] == 2);
  REQUIRE(result["entries"]["8"] == 1);
  REQUIRE(result["grading_offset"] == 8);
  REQUIRE(result["total"] == 3);

  const RunResult series = run_cli("csbetti --stratum 1 --max-degree 6", x3);
  REQUIRE(series.exit_code == 0);
  const Json s = Json::parse(series.out)["result"];
  REQUIRE(s["truncated"] == true);
  REQUIRE(s["entries"]["0"] == 4);  // 1 (plane) + 3 lines
}
