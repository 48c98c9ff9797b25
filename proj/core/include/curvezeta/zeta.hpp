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

/// Point counts N_1..N_k of a curve over F_q and its extensions.
/// counts[j-1] holds N_j (all public sequences are 1-based in the docs
/// and in serialized output).
struct CountSequence {
  PrimePower q;
  std::vector<mpz_class> counts;
};

/// Power sums S_1..S_k of the reciprocal zeta-numerator roots,
/// related to counts by S_j = q^j + 1 - N_j. sums[j-1] holds S_j.
struct PowerSums {
  PrimePower q;
  std::vector<mpz_class> sums;
};

/// The zeta numerator P(T) = c_0 + c_1 T + ... + c_{2g} T^{2g} of a
/// genus-g curve over F_q, with exact rational coefficients. For genuine
/// curve data every c_j is an integer, c_0 = 1 and c_{2g} = q^g; inputs
/// that are not curve counts may produce nonintegral coefficients, which
/// the `integral` flag records (the recurrences themselves are defined
/// over the rationals).
struct ZetaNumerator {
  PrimePower q;
  unsigned genus = 0;
  std::vector<mpq_class> coeffs;  // size 2*genus + 1, coeffs[j] = c_j
  bool integral = false;

  /// Whether c_{g+l} == q^l * c_{g-l} holds for l = 1..g.
  bool satisfies_functional_equation() const;
};

PowerSums counts_to_power_sums(const CountSequence& counts);
CountSequence power_sums_to_counts(const PowerSums& sums);

/// Solves S_j + c_1 S_{j-1} + ... + c_{j-1} S_1 + j c_j = 0 for
/// c_1..c_m given S_1..S_m, in exact rational arithmetic.
std::vector<mpq_class> newton_coefficients(const std::vector<mpq_class>& sums);
std::vector<mpq_class> newton_coefficients(const PowerSums& sums);

/// Computes S_j = -(c_1 S_{j-1} + ... + c_n S_{j-n}) for j > n, given
/// c_1..c_n and S_1..S_{j-1} (only the last n of which are read).
mpq_class newton_next_power_sum(const std::vector<mpq_class>& coeffs,
                                const std::vector<mpq_class>& sums,
                                unsigned j);

/// Reconstructs P(T) from the first g = |counts| point counts: c_1..c_g
/// from the Newton recurrence, c_{g+1}..c_{2g} from the functional
/// equation c_{g+l} = q^l c_{g-l}.
ZetaNumerator zeta_numerator(const PrimePower& q,
                             const std::vector<mpz_class>& counts);

/// Per-index Weil bound verdicts: ok[r-1] is S_r^2 <= 4 g^2 q^r, decided
/// in exact integer arithmetic.
struct WeilReport {
  std::vector<bool> ok;
  std::vector<unsigned> failures;  // 1-based indices with ok == false
  bool all_ok() const { return failures.empty(); }
};

WeilReport weil_bound_check(const PrimePower& q, unsigned genus,
                            const PowerSums& sums);

/// Output of the two bootstrap variants. `values` holds N_1..N_k exactly;
/// entries are rational only when the input was not consistent with any
/// curve. Diagnostics never abort the computation.
struct BootstrapResult {
  PrimePower q;
  unsigned genus = 0;
  std::vector<mpq_class> values;      // N_1..N_k
  std::vector<mpq_class> power_sums;  // S_1..S_max(k, 2g)
  ZetaNumerator zeta;
  bool integral = false;                // every c_j integral
  bool functional_equation_ok = false;  // see ZetaNumerator
  std::vector<unsigned> weil_failures;  // 1-based indices r failing Weil

  bool weil_ok() const { return weil_failures.empty(); }
  bool values_integral() const;
  /// The values as exact integers. Throws nonintegral_sequence when any
  /// entry has a denominator.
  CountSequence counts() const;
};

/// Extends N_1..N_g to N_1..N_k using only the first g counts and the
/// functional-equation symmetry. The genus is the input length; when the
/// optional explicit genus is given it must match. k <= g returns the
/// input prefix unchanged.
BootstrapResult bootstrap_counts(const PrimePower& q,
                                 const std::vector<mpz_class>& counts,
                                 unsigned k,
                                 std::optional<unsigned> genus = std::nullopt);

/// The 2g-input variant: all of c_1..c_{2g} are computed from the Newton
/// recurrence, without using the functional equation. Requires
/// |counts| == 2 * genus.
BootstrapResult bootstrap_counts_basic(const PrimePower& q,
                                       const std::vector<mpz_class>& counts,
                                       unsigned genus, unsigned k);

/// Expands T d/dT log( P(T) / ((1-T)(1-qT)) ) as a formal power series
/// over the exact rationals and checks that the coefficient of T^r equals
/// N_r for every r <= |counts|. This is the series route, independent of
/// the bootstrap recurrences.
bool zeta_series_check(const PrimePower& q, const ZetaNumerator& numerator,
                       const CountSequence& counts);

/// Detail of a subsequence cross-check, see subsequence_check.
struct SubsequenceReport {
  bool ok = false;
  std::vector<mpq_class> expected;  // N_{s*j} from the long sequence
  std::vector<mpq_class> got;       // bootstrap over q^s
};

/// Verifies that the stride-s subsequence of the bootstrapped sequence
/// for (q, N_1..N_g) equals the bootstrap over q^s of (N_s, ..., N_{gs}),
/// for j = 1..k.
SubsequenceReport subsequence_check_detail(const PrimePower& q,
                                           const std::vector<mpz_class>& counts,
                                           unsigned stride, unsigned k);
bool subsequence_check(const PrimePower& q,
                       const std::vector<mpz_class>& counts, unsigned stride,
                       unsigned k);

}  // namespace curvezeta
