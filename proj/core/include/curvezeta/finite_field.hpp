// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "curvezeta/errors.hpp"

namespace curvezeta {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// An element of F_{p^n}, stored as the coefficient vector of its
/// canonical representative modulo (modulus, p). coeffs()[i] is the
/// coefficient of degree i, always reduced into [0, p).
///
/// Elements are plain values: copyable, comparable, and safe to share
/// between threads. Each element keeps its context alive.
class FieldElement {
 public:
  const FieldCtxPtr& ctx() const noexcept { return ctx_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inverse() const;

  /// Renders as a polynomial in `var`, descending powers, e.g. "t^2 + 2*t".
  std::string to_string(char var = 't') const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);

  /// Equality is false (not an error) across incompatible contexts.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  friend class FieldCtx;
  FieldElement(FieldCtxPtr ctx, std::vector<std::uint64_t> coeffs)
      : ctx_(std::move(ctx)), c_(std::move(coeffs)) {}

  FieldCtxPtr ctx_;
  std::vector<std::uint64_t> c_;
};

/// An explicit model of F_{p^n} as F_p[x]/(modulus). Immutable after
/// construction; all arithmetic routed through it is pure.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// F_{p^n} with the deterministic lexicographically smallest monic
  /// irreducible modulus (see find_irreducible). n == 1 uses the
  /// residues-mod-p convention with modulus x.
  static FieldCtxPtr create(std::uint64_t p, unsigned n);

  /// Like create() but with a caller-chosen monic irreducible modulus of
  /// degree n (coefficient of x^i at index i). Throws error if the
  /// modulus is not monic, not reduced, or reducible.
  static FieldCtxPtr with_modulus(std::uint64_t p,
                                  std::vector<std::uint64_t> modulus);

  std::uint64_t p() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return mod_; }

  /// p^n, exact.
  mpz_class order() const;
  /// p^n as a machine word; throws error when it does not fit.
  std::uint64_t order_u64() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The image of the integer c, i.e. the constant c mod p.
  FieldElement from_residue(std::uint64_t c) const;
  /// The residue class of x: the adjoined root of the modulus. For n == 1
  /// this is the zero element.
  FieldElement generator() const;

  /// Element number `index` in the canonical enumeration: index written
  /// base p, digit i becoming the degree-i coefficient. Index 0 is zero,
  /// 1 is one.
  FieldElement element_from_index(std::uint64_t index) const;

  /// All p^n elements in enumeration order. Guarded against accidental
  /// huge materializations.
  std::vector<FieldElement> enumerate() const;

  bool compatible_with(const FieldCtx& other) const noexcept {
    return this == &other ||
           (p_ == other.p_ && n_ == other.n_ && mod_ == other.mod_);
  }

  // Arithmetic entry points used by the FieldElement operators.
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t exponent) const;

 private:
  FieldCtx(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus);

  void check_ctx(const FieldElement& a, const FieldElement& b) const;
  FieldElement wrap(std::vector<std::uint64_t> coeffs) const;

  std::uint64_t p_;
  unsigned n_;
  std::vector<std::uint64_t> mod_;      // monic, size n_ + 1
  std::vector<std::uint64_t> neg_mod_;  // x^n == sum neg_mod_[i] x^i
};

/// The monic irreducible polynomial of degree n over F_p that is smallest
/// in lexicographic order on the tuple (c_{n-1}, ..., c_1, c_0).
/// Deterministic across runs and platforms. Coefficient of x^i at index i;
/// the result has size n + 1 with leading coefficient 1.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned n);

/// Irreducibility by trial division by every monic polynomial of degree
/// at most deg/2. `poly` must be monic of degree >= 1 with reduced
/// coefficients.
bool poly_is_irreducible(const std::vector<std::uint64_t>& poly,
                         std::uint64_t p);

/// All roots in ctx of a nonzero univariate polynomial with coefficients
/// in F_p (coefficient of degree i at index i), found by exhaustive
/// evaluation. Returned in enumeration order.
std::vector<FieldElement> solve_in_field(const std::vector<std::uint64_t>& poly,
                                         const FieldCtxPtr& ctx);

}  // namespace curvezeta
