#include "gca/report.hpp"

#include <cstdio>
#include <ctime>
#include <ostream>

namespace gca {

nlohmann::json BoundReport::to_json() const {
  return nlohmann::json{{"check", check}, {"params", params}, {"lhs", lhs},
                        {"rhs", rhs},     {"slack", slack},   {"pass", pass},
                        {"seed", seed}};
}

BoundReport make_report(std::string check, nlohmann::json params, double lhs, double rhs,
                        double tol, std::uint64_t seed) {
  BoundReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = lhs <= rhs + tol;
  r.seed = seed;
  return r;
}

namespace {

std::string timestamp_utc() {
  char buf[32];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_reports(std::ostream& os, const std::vector<BoundReport>& reports,
                   ReportFormat format) {
  if (format == ReportFormat::Json) {
    os << nlohmann::json{{"timestamp", timestamp_utc()}}.dump() << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      nlohmann::json j = reports[i].to_json();
      j["trial"] = i;
      os << j.dump() << "\n";
    }
  } else {
    os << "# generated " << timestamp_utc() << "\n";
    os << "check,seed,trial,lhs,rhs,slack,pass\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      os << r.check << "," << r.seed << "," << i << "," << fmt_double(r.lhs) << ","
         << fmt_double(r.rhs) << "," << fmt_double(r.slack) << ","
         << (r.pass ? "true" : "false") << "\n";
    }
  }
}

}  // namespace gca
