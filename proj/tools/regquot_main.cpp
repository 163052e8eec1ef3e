#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "regquot/error.hpp"
#include "regquot/job.hpp"
#include "regquot/morava.hpp"

namespace {

int emit(const regquot::JobReport& report, const std::string& json_path) {
  std::cout << report.text;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << report.json.dump(2) << "\n";
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology and cohomology algebras of regular quotient rings"};
  std::string job_path, json_path;
  std::optional<int> window, laurent;
  bool render = false;
  app.add_option("job", job_path, "Job file (JSON)")->required();
  app.add_option("--json", json_path, "Write the JSON report to this path");
  app.add_option("--window", window, "Override the degree window D");
  app.add_option("--laurent", laurent, "Override the Laurent window L");
  app.add_flag("--render", render, "Print the canonical form of the job and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ifstream in(job_path);
  if (!in) {
    return emit(regquot::input_error_report("cannot read " + job_path, "InvalidArgument"), json_path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  const auto start = std::chrono::steady_clock::now();
  regquot::JobDescription job;
  try {
    job = regquot::parse_job(buffer.str());
    if (window || laurent) {
      regquot::Window w = job.window.value_or(regquot::Window{});
      if (!job.window && job.scenario) w = {regquot::morava_degree(job.scenario->p, job.scenario->n) + 2, 2};
      if (window) w.degree = *window;
      if (laurent) w.laurent = *laurent;
      job.window = w;
    }
  } catch (const regquot::AlgebraError& e) {
    return emit(regquot::input_error_report(e.detail(), std::string(regquot::to_string(e.kind()))), json_path);
  }
  if (render) {
    std::cout << regquot::render_job(job);
    return 0;
  }
  if (json_path.empty() && job.output) json_path = *job.output;
  const regquot::JobReport report = regquot::run_job(job);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "time: " << ms << " ms\n";
  return emit(report, json_path);
}
