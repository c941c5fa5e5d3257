#pragma once

#include <stdexcept>
#include <string>

namespace spca {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller broke an API precondition (dimension mismatch, invalid config value).
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent input data (parse failures, bad file formats).
class DataError : public Error {
public:
  using Error::Error;
};

/// Numerical breakdown: rank deficiency, non-finite values, degenerate input.
class NumericalFault : public Error {
public:
  using Error::Error;
};

}  // namespace spca
