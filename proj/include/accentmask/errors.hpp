#pragma once

#include <stdexcept>
#include <string>

namespace accentmask {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or corrupt serialized data (bad magic, version, truncation).
struct FormatError : Error {
  using Error::Error;
};

/// Recognized container but unsupported encoding (e.g. non-PCM WAV).
struct UnsupportedFormatError : FormatError {
  using FormatError::FormatError;
};

/// Invalid argument value (out-of-range rate, bad threshold ordering, ...).
struct ArgumentError : Error {
  using Error::Error;
};

/// Incompatible tensor/grid dimensions.
struct ShapeError : Error {
  using Error::Error;
};

/// Operation invoked in an invalid order (e.g. reading gradients before
/// a backward pass).
struct StateError : Error {
  using Error::Error;
};

/// Training aborted (non-finite loss or gradient).
struct TrainingError : Error {
  using Error::Error;
};

/// Invalid user-supplied data (manifest rows, unpaired transcripts, ...).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace accentmask
