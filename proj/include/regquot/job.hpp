#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "regquot/ring.hpp"

namespace regquot {

// One job = one command.  The JSON document format is described in the
// README; key names are frozen by the golden tests.
struct JobDescription {
  struct RingBlock {
    std::string base = "integers";  // integers | prime_field | integers_mod | localized
    long modulus = 0;               // p or m where applicable
    std::vector<Generator> generators;
    std::vector<std::string> relations;
  };
  struct SequenceEntry {
    std::string element;
    std::optional<std::string> obstruction;
  };
  struct ScenarioBlock {
    long p = 0;
    int n = 0;
  };

  std::string command;
  std::optional<RingBlock> ring;
  std::vector<SequenceEntry> sequence;
  // Target coefficients k = R/(target); absent means k = F.
  std::optional<std::vector<std::string>> target;
  std::optional<Window> window;
  std::optional<ScenarioBlock> scenario;
  nlohmann::json args = nlohmann::json::object();
  std::optional<std::string> output;
};

extern const std::vector<std::string> kCommands;

// ParseError (with line and column) for malformed documents,
// SemanticError for undefined names, odd degrees, bad obstruction degrees.
JobDescription parse_job(const std::string& text);

nlohmann::json job_to_json(const JobDescription& job);
// Canonical text form: render(parse(render(job))) == render(job).
std::string render_job(const JobDescription& job);

struct JobReport {
  int exit_code = 0;  // 0 success, 1 mathematical refutation, 2 invalid input
  nlohmann::json json;
  std::string text;
};

JobReport run_job(const JobDescription& job);
// Report for a document that failed to parse.
JobReport input_error_report(const std::string& message, const std::string& kind);

}  // namespace regquot
