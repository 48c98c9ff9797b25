// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "curvezeta/bounds.hpp"

#include <map>

namespace curvezeta {
namespace {

mpz_class floor_2_sqrt(const PrimePower& q) { return isqrt_floor(4 * q.q()); }

// p^(e/2) for even e, p^((e+1)/2) for odd e, etc.
mpz_class p_pow(const PrimePower& q, unsigned exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.p().get_mpz_t(), exp);
  return r;
}

// Decides 2 sqrt(q) - m > (sqrt(5) - 1) / 2 exactly, for non-square q.
// With B = 2m - 1 the claim is sqrt(16 q) - B > sqrt(5); both sides are
// positive (q is not a square, so 4 sqrt(q) > 2m > B), and squaring twice
// gives the integer test below. L = 16q + B^2 - 5 is always positive.
bool exceeds_golden_gap(const PrimePower& q, const mpz_class& m) {
  const mpz_class b = 2 * m - 1;
  const mpz_class lhs = 16 * q.q() + b * b - 5;
  return lhs * lhs > 64 * b * b * q.q();
}

bool is_square(const mpz_class& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<mpz_class> serre_genus2(const PrimePower& q) {
  const mpz_class m = floor_2_sqrt(q);
  if (q.q() == 4) return mpz_class(10);
  if (q.q() == 9) return mpz_class(20);
  if (q.e() % 2 == 0) return mpz_class(q.q() + 1 + 2 * m);
  const bool special = mpz_class(m % q.p()) == 0 || is_square(q.q() - 1) ||
                       is_square(4 * q.q() - 3) || is_square(4 * q.q() - 7);
  if (special) {
    if (exceeds_golden_gap(q, m)) return mpz_class(q.q() + 2 * m);
    return mpz_class(q.q() + 2 * m - 1);
  }
  return mpz_class(q.q() + 1 + 2 * m);
}

std::optional<mpz_class> serre_genus3(const PrimePower& q) {
  static const std::map<unsigned long, unsigned long> table = {
      {2, 7}, {3, 10}, {4, 14}, {5, 16}, {7, 20}, {8, 24}, {9, 28}};
  if (q.q().fits_ulong_p()) {
    const auto it = table.find(q.q().get_ui());
    if (it != table.end()) return mpz_class(it->second);
  }
  return std::nullopt;
}

}  // namespace

mpz_class isqrt_floor(const mpz_class& n) {
  if (n < 0) throw error("isqrt_floor of a negative number");
  if (n < 2) return n;
  // Newton iteration x <- (x + n/x) / 2 from an initial value >= sqrt(n)
  // decreases monotonically to floor(sqrt(n)).
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class x = 1;
  x <<= (bits + 1) / 2;
  while (true) {
    mpz_class y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

mpz_class hws_bound(const PrimePower& q, unsigned genus) {
  return q.q() + 1 + genus * floor_2_sqrt(q);
}

bool is_admissible_trace(const PrimePower& q, const mpz_class& t) {
  const mpz_class m = floor_2_sqrt(q);
  if (t < -m || t > m) return false;
  if (gcd(t, q.p()) == 1) return true;
  const unsigned e = q.e();
  const mpz_class abs_t = abs(t);
  if (e % 2 == 0) {
    if (abs_t == 2 * p_pow(q, e / 2)) return true;
    if (q.p() % 3 != 1 && abs_t == p_pow(q, e / 2)) return true;
  } else {
    if ((q.p() == 2 || q.p() == 3) && abs_t == p_pow(q, (e + 1) / 2)) {
      return true;
    }
  }
  if (t == 0 && (e % 2 == 1 || q.p() % 4 != 1)) return true;
  return false;
}

std::vector<mpz_class> deuring_offsets(const PrimePower& q) {
  const mpz_class m = floor_2_sqrt(q);
  std::vector<mpz_class> offsets;
  for (mpz_class t = -m; t <= m; ++t) {
    if (is_admissible_trace(q, t)) offsets.push_back(t);
  }
  return offsets;
}

std::vector<mpz_class> deuring_set(const PrimePower& q) {
  auto set = deuring_offsets(q);
  for (auto& t : set) t += q.q() + 1;
  return set;
}

std::optional<mpz_class> serre_max_points(const PrimePower& q, unsigned genus) {
  switch (genus) {
    case 1: {
      // Largest admissible trace; m or m-1 is always admissible, so the
      // descent terminates immediately. Waterhouse is the single source
      // of truth here rather than a separate closed form.
      for (mpz_class t = floor_2_sqrt(q); t >= 0; --t) {
        if (is_admissible_trace(q, t)) return mpz_class(q.q() + 1 + t);
      }
      return mpz_class(q.q() + 1);  // unreachable: m or m-1 is admissible
    }
    case 2:
      return serre_genus2(q);
    case 3:
      return serre_genus3(q);
    default:
      throw unsupported_genus("N_q(g) is implemented for g in {1, 2, 3}");
  }
}

BoundsReport compare_to_bounds(const PrimePower& q, unsigned genus,
                               const mpz_class& n1) {
  BoundsReport report;
  report.hws = hws_bound(q, genus);
  report.serre = (genus >= 1 && genus <= 3) ? serre_max_points(q, genus)
                                            : std::nullopt;
  report.is_hws_maximal = n1 == report.hws;
  report.meets_serre = report.serre.has_value() && n1 == *report.serre;
  return report;
}

}  // namespace curvezeta
