// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "curvezeta/errors.hpp"

namespace curvezeta {

/// A validated prime power q = p^e together with its factorization.
///
/// Construction factors (or checks) the input exactly; instances are
/// immutable afterwards, so p(), e() and q() are always consistent.
class PrimePower {
 public:
  /// Default-constructs the smallest prime power, q = 2. Exists so that
  /// aggregate result types can carry a PrimePower member; every API that
  /// returns one overwrites it.
  PrimePower() : p_(2), e_(1), q_(2) {}

  /// Factors q as p^e. Throws invalid_prime_power if q is not one.
  static PrimePower from_value(const mpz_class& q);

  /// Builds p^e from its parts. Throws invalid_prime_power if p is not
  /// prime or e == 0.
  static PrimePower from_parts(const mpz_class& p, unsigned e);

  const mpz_class& p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  const mpz_class& q() const noexcept { return q_; }

  /// q^r as an exact integer.
  mpz_class q_pow(unsigned r) const;

  /// The prime power q^s = p^(e*s).
  PrimePower power(unsigned s) const;

  /// p as a machine word, for residue arithmetic. Throws error if p does
  /// not fit.
  std::uint64_t p_u64() const;

  std::string to_string() const { return q_.get_str(); }

  bool operator==(const PrimePower& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_;
  }
  bool operator!=(const PrimePower& other) const noexcept {
    return !(*this == other);
  }

 private:
  PrimePower(mpz_class p, unsigned e, mpz_class q)
      : p_(std::move(p)), e_(e), q_(std::move(q)) {}

  mpz_class p_;
  unsigned e_;
  mpz_class q_;
};

/// Miller-Rabin based primality test (exact for word-sized inputs in
/// practice; composite answers are always exact).
bool is_probable_prime(const mpz_class& n);

}  // namespace curvezeta
