// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvezeta/finite_field.hpp>

#include <cstdint>
#include <random>
#include <vector>

using namespace curvezeta;

namespace {

using Poly = std::vector<std::uint64_t>;

// Test-side polynomial arithmetic over F_p, independent of the library's
// internals, for the Rabin-style irreducibility cross-check.
Poly t_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::uint64_t t_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

Poly t_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
  }
  r = t_trim(std::move(r));
  // reduce modulo the monic mod
  while (r.size() >= mod.size()) {
    const std::uint64_t lead = r.back();
    const std::size_t shift = r.size() - mod.size();
    for (std::size_t i = 0; i < mod.size(); ++i) {
      r[i + shift] =
          (r[i + shift] + static_cast<unsigned __int128>(lead) * (p - mod[i])) %
          p;
    }
    r = t_trim(std::move(r));
  }
  return r;
}

Poly t_gcd(Poly a, Poly b, std::uint64_t p) {
  a = t_trim(std::move(a));
  b = t_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      const std::uint64_t factor =
          a.back() % p == 0
              ? 0
              : static_cast<std::uint64_t>(
                    static_cast<unsigned __int128>(a.back()) *
                    t_powmod(b.back(), p - 2, p) % p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] =
            (a[i + shift] +
             static_cast<unsigned __int128>(factor) * (p - b[i])) %
            p;
      }
      a = t_trim(std::move(a));
    }
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod f by repeated Frobenius of x.
Poly t_frobenius_power(const Poly& f, std::uint64_t p, unsigned k) {
  Poly x{0, 1};
  Poly acc = x;
  for (unsigned i = 0; i < k; ++i) {
    // acc <- acc^p mod f
    Poly result{1};
    Poly base = acc;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) result = t_mulmod(result, base, f, p);
      base = t_mulmod(base, base, f, p);
      e >>= 1;
    }
    acc = result;
  }
  return acc;
}

// gcd(x^(p^k) - x, f) == 1 for k < n and x^(p^n) == x mod f.
bool rabin_style_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(f.size()) - 1;
  for (unsigned k = 1; k < n; ++k) {
    Poly fro = t_frobenius_power(f, p, k);
    // fro - x
    if (fro.size() < 2) fro.resize(2, 0);
    fro[1] = (fro[1] + p - 1) % p;
    fro = t_trim(std::move(fro));
    const Poly g = t_gcd(f, fro, p);
    if (!(g.size() == 1)) return false;
  }
  Poly fro = t_frobenius_power(f, p, n);
  if (fro.size() < 2) fro.resize(2, 0);
  fro[1] = (fro[1] + p - 1) % p;
  return t_trim(std::move(fro)).empty();
}

}  // namespace

TEST_CASE("lexicographically smallest irreducible moduli") {
  CHECK(find_irreducible(2, 2) == Poly{1, 1, 1});     // x^2 + x + 1
  CHECK(find_irreducible(2, 3) == Poly{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(find_irreducible(5, 1) == Poly{0, 1});        // x
  CHECK(find_irreducible(3, 2) == Poly{1, 0, 1});     // x^2 + 1
}

TEST_CASE("irreducibility agrees with the Frobenius-gcd criterion") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (unsigned n = 2; n <= 5; ++n) {
      const Poly f = find_irreducible(p, n);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(rabin_style_irreducible(f, p));
    }
  }
}

TEST_CASE("generator relations in the small binary fields") {
  // In F_4 with modulus x^2 + x + 1 the generator satisfies a^2 = a + 1.
  const auto f4 = FieldCtx::create(2, 2);
  const auto a = f4->generator();
  CHECK(a * a == a + f4->one());

  // In F_8 with modulus x^3 + x + 1 the generator satisfies b^3 = b + 1.
  const auto f8 = FieldCtx::create(2, 3);
  const auto b = f8->generator();
  CHECK(b.pow(3) == b + f8->one());

  // Additive identity.
  CHECK(a + f4->zero() == a);
}

TEST_CASE("enumeration order and cardinality") {
  const auto f4 = FieldCtx::create(2, 2);
  const auto all = f4->enumerate();
  REQUIRE(all.size() == 4);
  CHECK(all[0].is_zero());
  CHECK(all[1].is_one());
  CHECK(all[2] == f4->generator());
  CHECK(all[3] == f4->generator() + f4->one());

  const auto f8 = FieldCtx::create(2, 3);
  CHECK(f8->enumerate().size() == 8);

  // Pairwise distinct in a moderately large field.
  const auto f27 = FieldCtx::create(3, 3);
  const auto e27 = f27->enumerate();
  REQUIRE(e27.size() == 27);
  for (std::size_t i = 0; i < e27.size(); ++i) {
    for (std::size_t j = i + 1; j < e27.size(); ++j) {
      CHECK(e27[i] != e27[j]);
    }
  }
}

TEST_CASE("Fermat: a^(q-1) == 1 for all nonzero a") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 10}, {2, 13}, {3, 5}, {5, 3}, {7, 2}, {8191, 1}}) {
    const auto ctx = FieldCtx::create(p, n);
    const std::uint64_t order = ctx->order_u64();
    for (std::uint64_t i = 1; i < order; ++i) {
      const auto a = ctx->element_from_index(i);
      if (!a.pow(order - 1).is_one()) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(i);
        REQUIRE(a.pow(order - 1).is_one());
      }
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20260808);
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 3}, {5, 2}, {3, 3}, {101, 1}}) {
    const auto ctx = FieldCtx::create(p, n);
    const std::uint64_t order = ctx->order_u64();
    std::uniform_int_distribution<std::uint64_t> dist(0, order - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = ctx->element_from_index(dist(rng));
      const auto b = ctx->element_from_index(dist(rng));
      const auto c = ctx->element_from_index(dist(rng));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == ctx->zero());
      if (!b.is_zero()) {
        CHECK(a / b * b == a);
        CHECK((b.inverse() * b).is_one());
      }
    }
  }
}

TEST_CASE("solve_in_field") {
  // x^3 + x + 1 has the three roots b, b^2, b^4 in F_8.
  const auto f8 = FieldCtx::create(2, 3);
  const auto b = f8->generator();
  const auto roots = solve_in_field({1, 1, 0, 1}, f8);
  REQUIRE(roots.size() == 3);
  auto contains = [&roots](const FieldElement& e) {
    for (const auto& r : roots) {
      if (r == e) return true;
    }
    return false;
  };
  CHECK(contains(b));
  CHECK(contains(b.pow(2)));
  CHECK(contains(b.pow(4)));

  // x^2 + 1 = (x+1)^2 over F_2.
  const auto f2 = FieldCtx::create(2, 1);
  const auto r2 = solve_in_field({1, 0, 1}, f2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].is_one());

  // x^2 + x + 1 has no roots in F_2.
  CHECK(solve_in_field({1, 1, 1}, f2).empty());
}

TEST_CASE("division errors") {
  const auto f8 = FieldCtx::create(2, 3);
  CHECK_THROWS_AS(f8->one() / f8->zero(), division_by_zero);
  CHECK_THROWS_AS(f8->zero().inverse(), division_by_zero);

  const auto f4 = FieldCtx::create(2, 2);
  CHECK_THROWS_AS(f4->one() + f8->one(), ctx_mismatch);
  CHECK(f4->one() != f8->one());
}

TEST_CASE("enumeration guard") {
  // Materializing 2^30 elements is refused; index access still works.
  const auto big = FieldCtx::create(2, 30);
  CHECK_THROWS_AS(big->enumerate(), budget_exceeded);
  CHECK(big->element_from_index(5).coeffs()[0] == 1);
  CHECK(big->order() == (mpz_class(1) << 30));
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(FieldCtx::with_modulus(2, {1, 0, 1}), error);  // (x+1)^2
  CHECK_THROWS_AS(FieldCtx::with_modulus(2, {1, 1}), error);  // x+1, not x
  CHECK_THROWS_AS(FieldCtx::with_modulus(4, {1, 1, 1}), invalid_prime_power);
  // A legal explicit modulus: x^2 + x + 2 over F_3.
  const auto ctx = FieldCtx::with_modulus(3, {2, 1, 1});
  CHECK(ctx->order() == 9);
}
