// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ufuse {

enum class ErrorKind {
  InvalidArgument,
  Io,
  BadFormat,
  Numeric,
};

/// Error thrown by all ufuse operations. `kind()` maps onto the C API
/// status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void check_arg(bool condition, const std::string& message) {
  if (!condition) {
    throw Error(ErrorKind::InvalidArgument, message);
  }
}

}  // namespace ufuse
