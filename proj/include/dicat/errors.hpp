#pragma once

#include <stdexcept>
#include <string>

namespace dicat {

/// Thrown when an iteration's fluid/increment stops contracting.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Base class for catalyst block file problems.
struct BlockIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BlockHeaderError : BlockIoError {
  using BlockIoError::BlockIoError;
};

struct BlockDimensionError : BlockIoError {
  using BlockIoError::BlockIoError;
};

struct BlockTruncatedError : BlockIoError {
  using BlockIoError::BlockIoError;
};

}  // namespace dicat
