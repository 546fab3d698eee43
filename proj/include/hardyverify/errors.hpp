#ifndef HARDYVERIFY_ERRORS_HPP
#define HARDYVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardyverify {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A sampled integrand value was negative.
struct NonPositiveIntegrand : Error {
  explicit NonPositiveIntegrand(const std::string& msg) : Error(msg) {}
};

/// Tolerance unmet at the evaluation budget.
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

/// Exponent configuration outside the operation's admissible range.
struct AdmissibilityError : Error {
  explicit AdmissibilityError(const std::string& msg) : Error(msg) {}
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& msg) : Error(msg) {}
};

struct ExponentError : Error {
  explicit ExponentError(const std::string& msg) : Error(msg) {}
};

struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& msg) : Error(msg) {}
};

struct GridError : Error {
  explicit GridError(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace hardyverify

#endif
