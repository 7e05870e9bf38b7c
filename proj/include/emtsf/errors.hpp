#pragma once

#include <stdexcept>
#include <string>

namespace emtsf {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor shape / operation contract violations (dimension mismatches,
// non-scalar loss, incompatible checkpoint vs. dataset, ...).
struct ShapeError : Error {
  using Error::Error;
};

// Invalid configuration value or key.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed input file content (CSV cells, ragged rows).
struct ParseError : Error {
  using Error::Error;
};

// Structurally unusable input (empty file, missing header).
struct FormatError : Error {
  using Error::Error;
};

// Series too short for the requested split / window geometry.
struct CapacityError : Error {
  using Error::Error;
};

// Non-finite values where finite ones are required; training divergence.
struct NumericError : Error {
  using Error::Error;
};

// Window origin or index outside the valid range.
struct BoundsError : Error {
  using Error::Error;
};

// backward() called on a tensor that no tape operation produced.
struct DetachedTensorError : Error {
  using Error::Error;
};

// File I/O failures (open/read/write).
struct IoError : Error {
  using Error::Error;
};

// Checkpoint file problems, each failure mode its own type so callers can
// tell them apart.
struct CheckpointError : Error {
  using Error::Error;
};
struct BadMagicError : CheckpointError {
  using CheckpointError::CheckpointError;
};
struct ChecksumError : CheckpointError {
  using CheckpointError::CheckpointError;
};
struct TruncatedError : CheckpointError {
  using CheckpointError::CheckpointError;
};

}  // namespace emtsf
