// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "curvezeta/prime_power.hpp"

#include <limits>

namespace curvezeta {

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PrimePower PrimePower::from_value(const mpz_class& q) {
  if (q < 2) {
    throw invalid_prime_power(q.get_str() + " is not a prime power");
  }
  // q = p^e has a unique representation with p prime, so scanning the
  // exponent from the largest candidate downwards stops at the only e
  // whose exact e-th root is prime.
  const auto max_e = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
  for (unsigned e = max_e; e >= 1; --e) {
    mpz_class root;
    const bool exact =
        mpz_root(root.get_mpz_t(), q.get_mpz_t(), e) != 0;
    if (exact && is_probable_prime(root)) {
      return PrimePower(std::move(root), e, q);
    }
  }
  throw invalid_prime_power(q.get_str() + " is not a prime power");
}

PrimePower PrimePower::from_parts(const mpz_class& p, unsigned e) {
  if (e == 0) {
    throw invalid_prime_power("exponent must be at least 1");
  }
  if (!is_probable_prime(p)) {
    throw invalid_prime_power(p.get_str() + " is not prime");
  }
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
  return PrimePower(p, e, std::move(q));
}

mpz_class PrimePower::q_pow(unsigned r) const {
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), q_.get_mpz_t(), r);
  return result;
}

PrimePower PrimePower::power(unsigned s) const {
  if (s == 0) {
    throw invalid_prime_power("exponent must be at least 1");
  }
  return from_parts(p_, e_ * s);
}

std::uint64_t PrimePower::p_u64() const {
  if (!p_.fits_ulong_p()) {
    throw error("prime " + p_.get_str() + " does not fit a machine word");
  }
  return static_cast<std::uint64_t>(p_.get_ui());
}

}  // namespace curvezeta
