// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "curvezeta/errors.hpp"
#include "curvezeta/prime_power.hpp"

namespace curvezeta {

/// floor(sqrt(n)) by integer Newton iteration; exact for any n >= 0.
mpz_class isqrt_floor(const mpz_class& n);

/// The Hasse-Weil-Serre upper bound q + 1 + g * floor(2 sqrt(q)).
mpz_class hws_bound(const PrimePower& q, unsigned genus);

/// Whether the trace t is realized by an elliptic curve over F_q, per the
/// Waterhouse classification of admissible Frobenius traces.
bool is_admissible_trace(const PrimePower& q, const mpz_class& t);

/// All admissible traces t in [-m, m], m = floor(2 sqrt(q)), sorted
/// ascending. The list is symmetric about 0.
std::vector<mpz_class> deuring_offsets(const PrimePower& q);

/// The exact set of cardinalities #E(F_q) of elliptic curves over F_q:
/// q + 1 + t over the admissible traces, sorted ascending.
std::vector<mpz_class> deuring_set(const PrimePower& q);

/// Serre's exact maximum N_q(g) of #C(F_q) over genus-g curves, for
/// g = 1, 2, 3. For g = 3 the value is only tabulated for
/// q in {2,3,4,5,7,8,9}; other q return nullopt. Throws unsupported_genus
/// for g outside {1,2,3}. No floating point is used anywhere: the
/// genus-2 golden-ratio comparison is decided by an equivalent integer
/// inequality.
std::optional<mpz_class> serre_max_points(const PrimePower& q, unsigned genus);

/// Comparison of an observed N_1 against both bounds.
struct BoundsReport {
  mpz_class hws;
  std::optional<mpz_class> serre;
  bool is_hws_maximal = false;
  bool meets_serre = false;
};

BoundsReport compare_to_bounds(const PrimePower& q, unsigned genus,
                               const mpz_class& n1);

}  // namespace curvezeta
