#ifndef GCA_SUITES_HPP
#define GCA_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gca/report.hpp"
#include "gca/words.hpp"

namespace gca {

// One shared flag vocabulary for every suite. Paths left empty mean
// "generate the population from the seed" (or stdout, for `out`).
struct SuiteConfig {
  std::string suite;
  GroupSpec group = free_group(2);
  int support_radius = 2;
  int ball_radius = 6;
  int trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string out;
  ReportFormat format = ReportFormat::Json;
  int dim = 64;
  int level_max = 12;
  std::string coeffs_path;
  std::string state_a_path;
  std::string state_b_path;
};

// Runs one named suite, writes its reports (stdout unless config.out is set)
// and returns the process exit code: 0 all pass, 1 some violation. Usage and
// capacity problems surface as exceptions for the caller to map to 2 / 3.
int run_suite(const SuiteConfig& config);

// The suite names run_suite accepts, in documentation order.
const std::vector<std::string>& suite_names();

}  // namespace gca

#endif
