#pragma once

#include <stdexcept>
#include <string>

namespace adss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input breaks a structural invariant (group membership, parity, unit norm).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested construction is undefined at this configuration
/// (parallel unit vectors, collapsed radius, boundary of a chart).
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// A coordinate chart degenerates at the point; another chart must be used.
class ChartError : public DegenerateConfiguration {
 public:
  using DegenerateConfiguration::DegenerateConfiguration;
};

}  // namespace adss
