#ifndef GCA_REPORT_HPP
#define GCA_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gca {

// One bound check: pass iff lhs <= rhs + tol, slack = rhs - lhs. The seed is
// the per-trial stream seed so any row can be replayed in isolation.
struct BoundReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

BoundReport make_report(std::string check, nlohmann::json params, double lhs, double rhs,
                        double tol, std::uint64_t seed);

enum class ReportFormat { Json, Csv };

// JSON lines or CSV. The first line is a timestamp header and is the only
// nondeterministic output; everything after it is byte-identical for
// identical configurations.
void write_reports(std::ostream& os, const std::vector<BoundReport>& reports,
                   ReportFormat format);

}  // namespace gca

#endif
