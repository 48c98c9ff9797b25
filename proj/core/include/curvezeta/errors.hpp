// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvezeta {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The given q is not of the form p^e with p prime and e >= 1.
class invalid_prime_power : public error {
 public:
  using error::error;
};

/// A count list that must be nonempty was empty.
class empty_counts : public error {
 public:
  using error::error;
};

/// A sequence length does not match the stated genus.
class length_mismatch : public error {
 public:
  using error::error;
};

/// Integer extraction requested from a sequence with nonintegral entries.
class nonintegral_sequence : public error {
 public:
  using error::error;
};

/// Two field elements from different field contexts were combined.
class ctx_mismatch : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

/// An enumeration would exceed the configured work budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

class unsupported_genus : public error {
 public:
  using error::error;
};

/// Lexical or grammatical error in a curve expression, with byte offset.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t offset)
      : error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A curve expression whose terms do not all share the same total degree.
class not_homogeneous : public error {
 public:
  using error::error;
};

/// A curve expression whose terms all cancel modulo p.
class zero_polynomial : public error {
 public:
  using error::error;
};

}  // namespace curvezeta
