// errors.hpp -- exception taxonomy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace conlab {

/// Raised when a requested value cannot be produced by the graphical oracle
/// (non-graphical image, refused downstream computation).
class OracleUnavailableError : public std::runtime_error {
 public:
  explicit OracleUnavailableError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when the integrator leaves the trusted region (|p| > blow-up radius).
class FlowBlowupError : public OracleUnavailableError {
 public:
  explicit FlowBlowupError(const std::string& what)
      : OracleUnavailableError(what) {}
};

/// Raised when a (target, class) pair has no defined spectral value.
class UnsupportedCombinationError : public std::invalid_argument {
 public:
  explicit UnsupportedCombinationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised by sequence construction when some iterate fails; names the index.
class PartialSequenceError : public OracleUnavailableError {
 public:
  PartialSequenceError(const std::string& what, int failing_n)
      : OracleUnavailableError(what), failing_n(failing_n) {}
  int failing_n;
};

/// Raised by the Fekete estimator when sampled subadditivity fails.
class NotSubadditiveError : public std::runtime_error {
 public:
  NotSubadditiveError(const std::string& what, int m, int n)
      : std::runtime_error(what), m(m), n(n) {}
  int m, n;
};

/// Raised on malformed experiment configuration (maps to CLI exit code 3).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conlab
