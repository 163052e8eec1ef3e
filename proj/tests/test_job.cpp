#include <fstream>
#include <sstream>

#include "doctest.h"
#include "regquot/error.hpp"
#include "regquot/job.hpp"

using namespace regquot;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string xy_job(const std::string& command, const std::string& sequence, const std::string& args = "{}") {
  return R"({"command": ")" + command +
         R"(", "ring": {"base": {"kind": "prime_field", "p": 2}, "generators": [{"name": "x", "degree": 2}, {"name": "y", "degree": 2}]}, "sequence": )" +
         sequence + R"(, "args": )" + args + "}";
}

std::string scenario_job(const std::string& command, long p, int n, const std::string& args = "{}") {
  return R"({"command": ")" + command + R"(", "scenario": {"p": )" + std::to_string(p) + R"(, "n": )" +
         std::to_string(n) + R"(}, "args": )" + args + "}";
}

}  // namespace

TEST_CASE("bundled jobs parse") {
  const JobDescription k1 = parse_job(read_file(REGQUOT_JOBS_DIR "/k1_p2.job"));
  CHECK(k1.command == "scenario");
  REQUIRE(k1.scenario);
  CHECK(k1.scenario->p == 2);
  CHECK(k1.scenario->n == 1);

  const JobDescription exa = parse_job(read_file(REGQUOT_JOBS_DIR "/exa.job"));
  CHECK(exa.command == "naturality");
  const JobReport report = run_job(exa);
  CHECK(report.exit_code == 0);
  CHECK(report.json["results"]["images"] == json::array({"3·a0"}));
}

TEST_CASE("rendering round-trips") {
  for (const std::string& text : {read_file(REGQUOT_JOBS_DIR "/k1_p2.job"), read_file(REGQUOT_JOBS_DIR "/exa.job"),
                                  xy_job("check-regular", R"([{"element": "x"}, {"element": "y"}])")}) {
    const std::string once = render_job(parse_job(text));
    CHECK(render_job(parse_job(once)) == once);
  }
}

TEST_CASE("input errors") {
  CHECK_THROWS_WITH_AS(parse_job("{\n  \"command\": \n}"), doctest::Contains("line 3, column 1"), AlgebraError);
  CHECK_THROWS_WITH_AS(
      parse_job(R"({"command": "presentation", "ring": {"generators": [{"name": "x", "degree": 3}]}, "sequence": []})"),
      doctest::Contains("SemanticError"), AlgebraError);
  CHECK_THROWS_WITH_AS(parse_job(xy_job("presentation", R"([{"element": "z"}])")), doctest::Contains("sequence[0]"),
                       AlgebraError);
  CHECK_THROWS_WITH_AS(parse_job(xy_job("presentation", R"([{"element": "x", "obstruction": "x"}])")),
                       doctest::Contains("SemanticError"), AlgebraError);
  CHECK_THROWS_WITH_AS(parse_job(R"({"command": "launch", "scenario": {"p": 2, "n": 1}})"),
                       doctest::Contains("unknown command"), AlgebraError);
  CHECK_THROWS_WITH_AS(parse_job(R"({"command": "scenario", "scenario": {"p": 2, "n": 1}, "extra": 1})"),
                       doctest::Contains("SemanticError"), AlgebraError);
}

TEST_CASE("exit codes") {
  const JobReport regular = run_job(parse_job(xy_job("check-regular", R"([{"element": "x"}, {"element": "y"}])")));
  CHECK(regular.exit_code == 0);
  const JobReport refuted = run_job(parse_job(xy_job("check-regular", R"([{"element": "x"}, {"element": "x"}])")));
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.json["status"] == "refuted");
  CHECK(refuted.json["results"]["first_failure_index"] == 2);

  const JobReport bad = run_job(parse_job(scenario_job("multiply", 2, 1, R"({"left": "a5", "right": "a0"})")));
  CHECK(bad.exit_code == 2);
  CHECK(bad.json["error"]["module"] == "clifford");
}

TEST_CASE("command results") {
  const JobReport square = run_job(parse_job(scenario_job("multiply", 2, 1, R"({"left": "a0", "right": "a0"})")));
  CHECK(square.json["results"]["product"] == "v1·1");

  const JobReport p22 = run_job(parse_job(scenario_job("presentation", 2, 2)));
  CHECK(p22.json["results"]["presentation"]["text"] == "Λ(a0) ⊗ T(a1)/(a1^2 − v2)");
  CHECK(p22.json["results"]["presentation"]["kind"] == "tensor-truncated");
  const json rel = p22.json["results"]["presentation"]["relations"];
  CHECK(std::is_sorted(rel.begin(), rel.end()));

  const JobReport coh = run_job(parse_job(scenario_job("cohomology", 2, 1)));
  CHECK(coh.json["results"]["presentation"]["text"] == "Λ(Q0)");

  const JobReport der = run_job(parse_job(scenario_job("derivations", 3, 2)));
  CHECK(der.json["results"]["theta_injective"] == true);
  CHECK(der.json["results"]["image_rank"] == 4);

  const JobReport tor = run_job(parse_job(
      xy_job("tor", R"([{"element": "x"}])", R"({"i": 1, "ideal": ["x"], "degree": 6})")));
  CHECK(tor.exit_code == 0);
  CHECK(tor.json["results"]["by_degree"].size() > 0);

  const JobReport cond = run_job(parse_job(xy_job("condition-ii", R"([{"element": "x"}])", R"({"ideals": [["x"], ["y"]]})")));
  CHECK(cond.json["results"]["holds"] == json::array({true}));
  const JobReport dec = run_job(parse_job(xy_job("decompose", R"([{"element": "x"}])", R"({"ideals": [["x"], ["y"]]})")));
  CHECK(dec.json["results"]["ok"] == true);

  const JobReport anti =
      run_job(parse_job(scenario_job("antipode", 3, 2, R"({"element": "a0*a1 + a0"})")));
  CHECK(anti.json["results"]["automorphism"] == true);
  CHECK(anti.json["results"]["involution"] == true);
}

TEST_CASE("reports are deterministic and contain no timing") {
  const std::string text = scenario_job("scenario", 2, 2);
  const JobReport a = run_job(parse_job(text)), b = run_job(parse_job(text));
  CHECK(a.json.dump() == b.json.dump());
  CHECK(a.json.dump().find("time") == std::string::npos);
  CHECK(a.json["results"]["top_square"] == "v2·1");
}
