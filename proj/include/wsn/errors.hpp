#pragma once

#include <stdexcept>
#include <string>

namespace wsn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid NetworkConfig values or config file contents.
struct ConfigError : Error {
  using Error::Error;
};

// Out-of-range argument to an individual operation.
struct ParameterError : Error {
  using Error::Error;
};

// Clustering produced an unusable result (empty cluster, zero-weight
// cluster, all-dead cluster). Callers re-seed or re-cluster.
struct DegenerateClusterError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace wsn
