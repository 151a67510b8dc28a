// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace wmnroute {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

/// Concatenation endpoint disagreement.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Concatenation would revisit a node.
class CycleError : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidQuery : public Error {
 public:
  using Error::Error;
};

/// Link delays or the bound do not sit on the delay grid used by MRA.
class QuantizationError : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Malformed graph/query/result file content.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// File system failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wmnroute
