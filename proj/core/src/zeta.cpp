// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "curvezeta/zeta.hpp"

#include <cstdint>

namespace curvezeta {
namespace {

bool is_integral(const mpq_class& v) { return v.get_den() == 1; }

mpq_class q_pow_rat(const PrimePower& q, unsigned r) {
  mpz_class t = q.q_pow(r);
  return mpq_class(t);
}

// S_1..S_g = q^j + 1 - N_j from a rational count prefix.
std::vector<mpq_class> prefix_power_sums(const PrimePower& q,
                                         const std::vector<mpq_class>& counts) {
  std::vector<mpq_class> sums;
  sums.reserve(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    mpq_class s = q_pow_rat(q, static_cast<unsigned>(j) + 1);
    s += 1;
    s -= counts[j];
    sums.push_back(std::move(s));
  }
  return sums;
}

std::vector<mpq_class> to_rational(const std::vector<mpz_class>& v) {
  std::vector<mpq_class> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Shared tail of both bootstrap variants, once c_0..c_{2g} are fixed.
// `sums` holds S_1..S_g (basic: S_1..S_{2g}) on entry; `echo` are the
// caller-supplied counts returned unchanged as the output prefix.
BootstrapResult finish_bootstrap(const PrimePower& q, unsigned genus,
                                 const std::vector<mpq_class>& echo,
                                 std::vector<mpq_class> coeffs,
                                 std::vector<mpq_class> sums, unsigned k) {
  const unsigned two_g = 2 * genus;
  // Extend the power sums to max(k, 2g). Within the coefficient range the
  // j*c_j term participates; beyond it the recurrence is linear in the
  // trailing 2g sums.
  const unsigned horizon = std::max(k, two_g);
  for (auto j = static_cast<unsigned>(sums.size()) + 1; j <= horizon; ++j) {
    mpq_class s = 0;
    if (j <= two_g) {
      s = coeffs[j];
      s *= static_cast<long>(j);
    }
    for (unsigned i = 1; i < j && i <= two_g; ++i) {
      s += coeffs[i] * sums[j - i - 1];
    }
    sums.push_back(-s);
  }

  BootstrapResult result;
  result.q = q;
  result.genus = genus;
  result.values.reserve(k);
  for (unsigned j = 1; j <= k; ++j) {
    if (j <= echo.size()) {
      result.values.push_back(echo[j - 1]);
    } else {
      mpq_class v = q_pow_rat(q, j);
      v += 1;
      v -= sums[j - 1];
      result.values.push_back(std::move(v));
    }
  }

  bool integral = true;
  for (const auto& c : coeffs) integral = integral && is_integral(c);
  result.zeta = ZetaNumerator{q, genus, std::move(coeffs), integral};
  result.integral = integral;
  result.functional_equation_ok = result.zeta.satisfies_functional_equation();

  const mpz_class four_g2_int = 4 * mpz_class(genus) * genus;
  const mpq_class four_g2(four_g2_int);
  for (unsigned r = 1; r <= sums.size(); ++r) {
    const mpq_class lhs = sums[r - 1] * sums[r - 1];
    if (lhs > four_g2 * q_pow_rat(q, r)) result.weil_failures.push_back(r);
  }
  result.power_sums = std::move(sums);
  return result;
}

// The symmetry-based bootstrap over exact rationals; both the public
// integer entry point and the subsequence check route through here.
BootstrapResult bootstrap_rational(const PrimePower& q,
                                   const std::vector<mpq_class>& counts,
                                   unsigned k) {
  if (counts.empty()) throw empty_counts("count sequence is empty");
  if (k == 0) throw error("horizon k must be at least 1");
  const auto g = static_cast<unsigned>(counts.size());

  auto sums = prefix_power_sums(q, counts);
  const auto head = newton_coefficients(sums);
  std::vector<mpq_class> coeffs(2 * g + 1);
  coeffs[0] = 1;
  for (unsigned j = 1; j <= g; ++j) coeffs[j] = head[j - 1];
  for (unsigned l = 1; l <= g; ++l) {
    coeffs[g + l] = q_pow_rat(q, l) * coeffs[g - l];
  }
  return finish_bootstrap(q, g, counts, std::move(coeffs), std::move(sums), k);
}

}  // namespace

bool ZetaNumerator::satisfies_functional_equation() const {
  for (unsigned l = 1; l <= genus; ++l) {
    mpq_class rhs = coeffs[genus - l];
    rhs *= mpq_class(q.q_pow(l));
    if (coeffs[genus + l] != rhs) return false;
  }
  return true;
}

PowerSums counts_to_power_sums(const CountSequence& counts) {
  if (counts.counts.empty()) throw empty_counts("count sequence is empty");
  PowerSums out{counts.q, {}};
  out.sums.reserve(counts.counts.size());
  for (std::size_t j = 0; j < counts.counts.size(); ++j) {
    mpz_class s = counts.q.q_pow(static_cast<unsigned>(j) + 1);
    s += 1;
    s -= counts.counts[j];
    out.sums.push_back(std::move(s));
  }
  return out;
}

CountSequence power_sums_to_counts(const PowerSums& sums) {
  CountSequence out{sums.q, {}};
  out.counts.reserve(sums.sums.size());
  for (std::size_t j = 0; j < sums.sums.size(); ++j) {
    mpz_class n = sums.q.q_pow(static_cast<unsigned>(j) + 1);
    n += 1;
    n -= sums.sums[j];
    out.counts.push_back(std::move(n));
  }
  return out;
}

std::vector<mpq_class> newton_coefficients(const std::vector<mpq_class>& sums) {
  std::vector<mpq_class> coeffs;  // coeffs[i-1] = c_i
  coeffs.reserve(sums.size());
  for (std::size_t j = 1; j <= sums.size(); ++j) {
    mpq_class acc = sums[j - 1];
    for (std::size_t i = 1; i < j; ++i) acc += coeffs[i - 1] * sums[j - i - 1];
    acc /= static_cast<long>(j);
    coeffs.push_back(-acc);
  }
  return coeffs;
}

std::vector<mpq_class> newton_coefficients(const PowerSums& sums) {
  return newton_coefficients(to_rational(sums.sums));
}

mpq_class newton_next_power_sum(const std::vector<mpq_class>& coeffs,
                                const std::vector<mpq_class>& sums,
                                unsigned j) {
  const auto n = static_cast<unsigned>(coeffs.size());
  if (j <= n) throw error("newton_next_power_sum requires j > n");
  if (sums.size() + 1 < j) {
    throw length_mismatch("need S_1..S_{j-1} to extend to S_j");
  }
  mpq_class acc = 0;
  for (unsigned i = 1; i <= n; ++i) acc += coeffs[i - 1] * sums[j - i - 1];
  return -acc;
}

ZetaNumerator zeta_numerator(const PrimePower& q,
                             const std::vector<mpz_class>& counts) {
  if (counts.empty()) throw empty_counts("count sequence is empty");
  const auto genus = static_cast<unsigned>(counts.size());
  const auto head = newton_coefficients(prefix_power_sums(q, to_rational(counts)));
  std::vector<mpq_class> coeffs(2 * genus + 1);
  coeffs[0] = 1;
  for (unsigned j = 1; j <= genus; ++j) coeffs[j] = head[j - 1];
  for (unsigned l = 1; l <= genus; ++l) {
    coeffs[genus + l] = q_pow_rat(q, l) * coeffs[genus - l];
  }
  bool integral = true;
  for (const auto& c : coeffs) integral = integral && is_integral(c);
  return ZetaNumerator{q, genus, std::move(coeffs), integral};
}

WeilReport weil_bound_check(const PrimePower& q, unsigned genus,
                            const PowerSums& sums) {
  WeilReport report;
  const mpz_class four_g2 = 4 * mpz_class(genus) * genus;
  for (unsigned r = 1; r <= sums.sums.size(); ++r) {
    const mpz_class& s = sums.sums[r - 1];
    const bool ok = s * s <= four_g2 * q.q_pow(r);
    report.ok.push_back(ok);
    if (!ok) report.failures.push_back(r);
  }
  return report;
}

bool BootstrapResult::values_integral() const {
  for (const auto& v : values) {
    if (!is_integral(v)) return false;
  }
  return true;
}

CountSequence BootstrapResult::counts() const {
  CountSequence out{q, {}};
  out.counts.reserve(values.size());
  for (const auto& v : values) {
    if (!is_integral(v)) {
      throw nonintegral_sequence("sequence entry " + v.get_str() +
                                 " is not an integer");
    }
    out.counts.push_back(v.get_num());
  }
  return out;
}

BootstrapResult bootstrap_counts(const PrimePower& q,
                                 const std::vector<mpz_class>& counts,
                                 unsigned k, std::optional<unsigned> genus) {
  if (counts.empty()) throw empty_counts("count sequence is empty");
  if (genus && *genus != counts.size()) {
    throw length_mismatch("explicit genus " + std::to_string(*genus) +
                          " does not match " + std::to_string(counts.size()) +
                          " supplied counts");
  }
  return bootstrap_rational(q, to_rational(counts), k);
}

BootstrapResult bootstrap_counts_basic(const PrimePower& q,
                                       const std::vector<mpz_class>& counts,
                                       unsigned genus, unsigned k) {
  if (counts.empty()) throw empty_counts("count sequence is empty");
  if (counts.size() != 2 * static_cast<std::size_t>(genus)) {
    throw length_mismatch("expected 2*genus = " + std::to_string(2 * genus) +
                          " counts, got " + std::to_string(counts.size()));
  }
  if (k == 0) throw error("horizon k must be at least 1");

  const auto rational = to_rational(counts);
  auto sums = prefix_power_sums(q, rational);
  const auto head = newton_coefficients(sums);  // c_1..c_{2g}, no symmetry
  std::vector<mpq_class> coeffs(2 * genus + 1);
  coeffs[0] = 1;
  for (unsigned j = 1; j <= 2 * genus; ++j) coeffs[j] = head[j - 1];
  return finish_bootstrap(q, genus, rational, std::move(coeffs),
                          std::move(sums), k);
}

bool zeta_series_check(const PrimePower& q, const ZetaNumerator& numerator,
                       const CountSequence& counts) {
  if (counts.q != q || numerator.q != q) {
    throw error("zeta_series_check inputs disagree about q");
  }
  const auto& c = numerator.coeffs;
  if (c.empty() || c[0] != 1) {
    throw error("zeta numerator must have constant term 1");
  }
  const auto k = static_cast<unsigned>(counts.counts.size());
  // B(T) = T P'(T) / P(T) truncated at order k, by series division:
  // b_r = a_r - sum_{i>=1} c_i b_{r-i} with a_r = r c_r.
  std::vector<mpq_class> b(k + 1, mpq_class(0));
  for (unsigned r = 1; r <= k; ++r) {
    mpq_class acc = 0;
    if (r < c.size()) {
      acc = c[r];
      acc *= static_cast<long>(r);
    }
    for (unsigned i = 1; i <= r && i < c.size(); ++i) {
      acc -= c[i] * b[r - i];
    }
    b[r] = std::move(acc);
  }
  // Coefficient r of T d/dT log Z is q^r + 1 + b_r and must equal N_r.
  for (unsigned r = 1; r <= k; ++r) {
    mpq_class expected = q_pow_rat(q, r);
    expected += 1;
    expected += b[r];
    if (expected != mpq_class(counts.counts[r - 1])) return false;
  }
  return true;
}

SubsequenceReport subsequence_check_detail(const PrimePower& q,
                                           const std::vector<mpz_class>& counts,
                                           unsigned stride, unsigned k) {
  if (stride == 0) throw error("stride must be at least 1");
  if (k == 0) throw error("horizon k must be at least 1");
  const auto g = static_cast<unsigned>(counts.size());
  const std::uint64_t wide =
      static_cast<std::uint64_t>(stride) * std::max(k, g);
  if (wide > (1u << 24)) {
    throw budget_exceeded("stride * horizon of " + std::to_string(wide) +
                          " is beyond the supported range");
  }
  const auto horizon = static_cast<unsigned>(wide);
  const auto longrun = bootstrap_counts(q, counts, horizon);

  std::vector<mpq_class> sub_counts;
  sub_counts.reserve(g);
  for (unsigned j = 1; j <= g; ++j) {
    sub_counts.push_back(longrun.values[stride * j - 1]);
  }
  const auto rerun = bootstrap_rational(q.power(stride), sub_counts, k);

  SubsequenceReport report;
  for (unsigned j = 1; j <= k; ++j) {
    report.expected.push_back(longrun.values[stride * j - 1]);
  }
  report.got = rerun.values;
  report.ok = report.got == report.expected;
  return report;
}

bool subsequence_check(const PrimePower& q,
                       const std::vector<mpz_class>& counts, unsigned stride,
                       unsigned k) {
  return subsequence_check_detail(q, counts, stride, k).ok;
}

}  // namespace curvezeta
