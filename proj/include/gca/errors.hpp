#ifndef GCA_ERRORS_HPP
#define GCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gca {

// Bad arguments, malformed input files, violated preconditions. CLI exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Requested truncation exceeds the enumeration cap. CLI exit code 3.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gca

#endif
