#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bernproc {

/// Invalid argument values (bad delta, alpha <= 1, u >= v, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact enumeration would need more coordinates than the configured limit.
/// Callers are expected to fall back to Monte Carlo.
struct ExactLimitExceeded : std::runtime_error {
  ExactLimitExceeded(std::size_t coordinates, std::size_t limit)
      : std::runtime_error("exact enumeration over " + std::to_string(coordinates) +
                           " coordinates exceeds limit " + std::to_string(limit)),
        coordinates(coordinates),
        limit(limit) {}
  std::size_t coordinates;
  std::size_t limit;
};

/// A documented operation precondition does not hold for the given inputs.
struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what, std::vector<std::string> details = {})
      : std::runtime_error(what), details(std::move(details)) {}
  std::vector<std::string> details;
};

/// Structural bookkeeping (level caps, block-count budgets) would overflow.
struct CapacityExceeded : std::runtime_error {
  explicit CapacityExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration (unknown suite name, bad key=value line, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bernproc
