// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "curvezeta/errors.hpp"
#include "curvezeta/finite_field.hpp"

namespace curvezeta {

/// Default cap on point evaluations for the brute-force routines,
/// overridable per call (and from the CLI via --budget).
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

/// One monomial coeff * x^dx * y^dy * z^dz with coeff in (0, p).
struct CurveTerm {
  unsigned dx = 0;
  unsigned dy = 0;
  unsigned dz = 0;
  std::uint64_t coeff = 1;

  friend bool operator==(const CurveTerm&, const CurveTerm&) = default;
};

/// A homogeneous trivariate polynomial over a prime field F_p, i.e. a
/// plane projective curve with prime-field coefficients. Terms are kept
/// combined, nonzero, sorted by (dx, dy, dz) descending, and all of the
/// same total degree.
class PlaneCurve {
 public:
  /// Parses the grammar
  ///   expr   := term (('+'|'-') term)*
  ///   term   := factor ('*' factor)*
  ///   factor := coefficient | var ('^' integer)?
  ///   var    := 'x' | 'y' | 'z'
  /// with arbitrary whitespace between tokens. Integer coefficients are
  /// reduced mod p, like terms combined and zero terms dropped.
  /// Throws parse_error (with byte offset), not_homogeneous, or
  /// zero_polynomial.
  static PlaneCurve parse(std::string_view src, std::uint64_t p);

  /// Builds a curve from raw terms (coefficients reduced mod p, like
  /// terms combined). Same homogeneity/nonzero checks as parse().
  static PlaneCurve from_terms(std::uint64_t p, std::vector<CurveTerm> terms);

  std::uint64_t p() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<CurveTerm>& terms() const noexcept { return terms_; }

  std::string to_string() const;

 private:
  PlaneCurve(std::uint64_t p, unsigned degree, std::vector<CurveTerm> terms)
      : p_(p), degree_(degree), terms_(std::move(terms)) {}

  std::uint64_t p_;
  unsigned degree_;
  std::vector<CurveTerm> terms_;
};

/// Exact number of projective points of C rational over F_{p^r}, by
/// exhaustive enumeration of the strata (x, y, 1), (x, 1, 0), (1, 0, 0).
/// `slices` partitions the affine stratum into contiguous chunks that are
/// counted independently and summed; the result is identical for every
/// slicing. Throws budget_exceeded if the enumeration would need more
/// than `budget` point evaluations.
mpz_class count_points(const PlaneCurve& curve, unsigned r,
                       std::uint64_t budget = kDefaultBudget,
                       unsigned slices = 1);

/// Bounded search for singular points: common projective zeros of the
/// curve and its three formal partial derivatives over F_{p^r} for
/// r = 1..r_max. Finding none is a bounded-search verdict, not a proof of
/// smoothness over the algebraic closure.
struct SmoothnessVerdict {
  struct SingularPoint {
    unsigned r = 0;
    std::array<std::vector<std::uint64_t>, 3> coords;  // coefficient vectors
    std::string display;
  };

  unsigned r_checked = 0;
  std::optional<SingularPoint> singular;

  bool clean() const { return !singular.has_value(); }
};

SmoothnessVerdict smoothness_probe(const PlaneCurve& curve, unsigned r_max = 3,
                                   std::uint64_t budget = kDefaultBudget);

/// An elliptic curve y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 in
/// normal form over F_p.
struct WeierstrassCubic {
  std::uint64_t p = 2;
  std::uint64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  std::string to_string() const;
  /// The projective closure as a degree-3 plane curve (one point at
  /// infinity, (0:1:0)).
  PlaneCurve projective_closure() const;

  friend bool operator==(const WeierstrassCubic&,
                         const WeierstrassCubic&) = default;
};

/// The discriminant of the normal form, reduced mod p; nonzero exactly
/// when the cubic is nonsingular.
std::uint64_t weierstrass_discriminant(const WeierstrassCubic& curve);

/// Number of F_{p^r}-points: affine solutions of the normal form plus the
/// single point at infinity.
mpz_class weierstrass_count(const WeierstrassCubic& curve, unsigned r,
                            std::uint64_t budget = kDefaultBudget);

/// Enumerates all p^5 normal-form cubics over F_p, keeps the nonsingular
/// ones, and groups them by their F_p point count. Group membership order
/// follows the (a1, a2, a3, a4, a6) enumeration and is reproducible.
std::map<std::uint64_t, std::vector<WeierstrassCubic>> classify_weierstrass_cubics(
    std::uint64_t p = 2, std::uint64_t budget = kDefaultBudget);

}  // namespace curvezeta
