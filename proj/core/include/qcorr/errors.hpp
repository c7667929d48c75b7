#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (e.g. dimA * dimB != matrix dimension).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix fails a density-matrix invariant (Hermiticity, trace, positivity).
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// The requested dimension is outside what a construction supports.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Bad scalar argument or malformed measurement.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Eigen-decomposition requested for a non-Hermitian matrix.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (I/O or syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcorr
