// gcalab: runs named verification suites and emits BoundReport files.
// Exit codes: 0 all pass, 1 violation, 2 usage error, 3 capacity exceeded.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gca/errors.hpp"
#include "gca/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical verification suites for group algebra norm bounds"};
  app.set_version_flag("--version", "gcalab 1.0.0");

  gca::SuiteConfig config;
  std::string group = "f2";
  std::string format = "json";

  std::string suite_help = "suite to run:";
  for (const auto& n : gca::suite_names()) suite_help += " " + n;
  app.add_option("--suite", config.suite, suite_help)->required();
  app.add_option("--group", group, "group: f<n> (free) or z<k> (free abelian)");
  app.add_option("--support-radius", config.support_radius,
                 "support ball radius R for generated elements");
  app.add_option("--ball", config.ball_radius, "truncation ball radius L");
  app.add_option("--trials", config.trials, "number of trials");
  app.add_option("--seed", config.seed, "root seed");
  app.add_option("--tol", config.tol, "pass tolerance");
  app.add_option("--out", config.out, "report path (default stdout)");
  app.add_option("--format", format, "report format: json or csv");
  app.add_option("--coeffs", config.coeffs_path,
                 "JSON coefficient file {word: [re, im]} replacing the random population");
  app.add_option("--state-a", config.state_a_path, "first state file");
  app.add_option("--state-b", config.state_b_path, "second state file");
  app.add_option("--dim", config.dim, "matrix dimension for graded-matrix suites");
  app.add_option("--levels", config.level_max, "maximum level for graded-matrix suites");

  try {
    app.parse(argc, argv);
    config.group = gca::parse_group_name(group);
    if (format == "json") {
      config.format = gca::ReportFormat::Json;
    } else if (format == "csv") {
      config.format = gca::ReportFormat::Csv;
    } else {
      throw gca::UsageError("unknown format '" + format + "'");
    }
    return gca::run_suite(config);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help / --version exit cleanly
  } catch (const gca::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const gca::UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
