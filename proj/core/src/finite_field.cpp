// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "curvezeta/finite_field.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "curvezeta/prime_power.hpp"

namespace curvezeta {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kEnumerationCap = u64{1} << 24;

u64 addm(u64 a, u64 b, u64 p) {
  const u64 s = a + b;  // p < 2^63, no overflow
  return s >= p ? s - p : s;
}

u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mulm(u64 a, u64 b, u64 p) {
  return static_cast<u64>((u128(a) * u128(b)) % p);
}

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

// a^(p-2); p prime and a != 0.
u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

// Dense univariate polynomials over F_p, coefficient of degree i at
// index i, normalized to have no leading zeros (zero == empty vector).
using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
  }
  trim(r);
  return r;
}

// Remainder of a modulo b; b nonzero.
Poly poly_rem(Poly a, const Poly& b, u64 p) {
  trim(a);
  const int db = poly_degree(b);
  assert(db >= 0);
  const u64 lead_inv = invm(b.back(), p);
  while (poly_degree(a) >= db) {
    const int shift = poly_degree(a) - db;
    const u64 factor = mulm(a.back(), lead_inv, p);
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = subm(a[i + shift], mulm(factor, b[i], p), p);
    }
    trim(a);
  }
  return a;
}

// Quotient and remainder in one pass.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, u64 p) {
  trim(a);
  const int db = poly_degree(b);
  assert(db >= 0);
  const u64 lead_inv = invm(b.back(), p);
  if (poly_degree(a) < db) return {Poly{}, std::move(a)};
  Poly q(poly_degree(a) - db + 1, 0);
  while (poly_degree(a) >= db) {
    const int shift = poly_degree(a) - db;
    const u64 factor = mulm(a.back(), lead_inv, p);
    q[shift] = factor;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = subm(a[i + shift], mulm(factor, b[i], p), p);
    }
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
  trim(a);
  return a;
}

// p^n as u64; throws when it would overflow.
u64 checked_order(u64 p, unsigned n) {
  u128 o = 1;
  for (unsigned i = 0; i < n; ++i) {
    o *= p;
    if (o > std::numeric_limits<u64>::max()) {
      throw error("field order p^n does not fit a machine word");
    }
  }
  return static_cast<u64>(o);
}

}  // namespace

bool poly_is_irreducible(const std::vector<u64>& poly, u64 p) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  // A reducible polynomial has a monic factor of degree <= d/2.
  for (int fd = 1; fd <= d / 2; ++fd) {
    const u64 count = checked_order(p, static_cast<unsigned>(fd));
    Poly divisor(static_cast<std::size_t>(fd) + 1, 0);
    divisor[static_cast<std::size_t>(fd)] = 1;
    for (u64 code = 0; code < count; ++code) {
      u64 c = code;
      for (int i = 0; i < fd; ++i) {
        divisor[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      if (poly_rem(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<u64> find_irreducible(u64 p, unsigned n) {
  if (p < 2 || !is_probable_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw invalid_prime_power(std::to_string(p) + " is not prime");
  }
  if (n == 0) throw error("extension degree must be at least 1");
  const u64 count = checked_order(p, n);
  std::vector<u64> candidate(n + 1, 0);
  candidate[n] = 1;
  // Codes enumerate the tuple (c_{n-1}, ..., c_0) in lexicographic order:
  // c_{n-1} is the most significant base-p digit.
  for (u64 code = 0; code < count; ++code) {
    u64 c = code;
    for (unsigned i = 0; i < n; ++i) {
      candidate[i] = c % p;
      c /= p;
    }
    if (n == 1 || poly_is_irreducible(candidate, p)) return candidate;
  }
  // Unreachable: an irreducible polynomial of every degree exists.
  throw error("no irreducible polynomial found");
}

FieldCtx::FieldCtx(u64 p, unsigned n, std::vector<u64> modulus)
    : p_(p), n_(n), mod_(std::move(modulus)) {
  neg_mod_.resize(n_);
  for (unsigned i = 0; i < n_; ++i) neg_mod_[i] = (p_ - mod_[i]) % p_;
}

FieldCtxPtr FieldCtx::create(u64 p, unsigned n) {
  return with_modulus(p, find_irreducible(p, n));
}

FieldCtxPtr FieldCtx::with_modulus(u64 p, std::vector<u64> modulus) {
  if (p < 2 || !is_probable_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw invalid_prime_power(std::to_string(p) + " is not prime");
  }
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw error("modulus must be monic of degree >= 1");
  }
  for (u64 c : modulus) {
    if (c >= p) throw error("modulus coefficients must lie in [0, p)");
  }
  const auto n = static_cast<unsigned>(modulus.size() - 1);
  if (n == 1) {
    if (modulus[0] != 0) {
      throw error("degree-1 modulus must be x (residues mod p)");
    }
  } else if (!poly_is_irreducible(modulus, p)) {
    throw error("modulus is reducible over F_p");
  }
  return FieldCtxPtr(new FieldCtx(p, n, std::move(modulus)));
}

mpz_class FieldCtx::order() const {
  mpz_class o;
  mpz_ui_pow_ui(o.get_mpz_t(), static_cast<unsigned long>(p_), n_);
  return o;
}

u64 FieldCtx::order_u64() const { return checked_order(p_, n_); }

FieldElement FieldCtx::wrap(std::vector<u64> coeffs) const {
  assert(coeffs.size() == n_);
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldCtx::zero() const {
  return wrap(std::vector<u64>(n_, 0));
}

FieldElement FieldCtx::one() const { return from_residue(1); }

FieldElement FieldCtx::from_residue(u64 c) const {
  std::vector<u64> v(n_, 0);
  v[0] = c % p_;
  return wrap(std::move(v));
}

FieldElement FieldCtx::generator() const {
  std::vector<u64> v(n_, 0);
  if (n_ >= 2) v[1] = 1;
  return wrap(std::move(v));
}

FieldElement FieldCtx::element_from_index(u64 index) const {
  std::vector<u64> v(n_, 0);
  for (unsigned i = 0; i < n_ && index != 0; ++i) {
    v[i] = index % p_;
    index /= p_;
  }
  if (index != 0) throw error("element index out of range");
  return wrap(std::move(v));
}

std::vector<FieldElement> FieldCtx::enumerate() const {
  const u64 count = order_u64();
  if (count > kEnumerationCap) {
    throw budget_exceeded("refusing to materialize " + std::to_string(count) +
                          " field elements");
  }
  std::vector<FieldElement> all;
  all.reserve(count);
  for (u64 i = 0; i < count; ++i) all.push_back(element_from_index(i));
  return all;
}

void FieldCtx::check_ctx(const FieldElement& a, const FieldElement& b) const {
  if (!compatible_with(*a.ctx()) || !compatible_with(*b.ctx())) {
    throw ctx_mismatch("field elements belong to different contexts");
  }
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  check_ctx(a, b);
  std::vector<u64> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = addm(a.c_[i], b.c_[i], p_);
  return wrap(std::move(r));
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  check_ctx(a, b);
  std::vector<u64> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = subm(a.c_[i], b.c_[i], p_);
  return wrap(std::move(r));
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  check_ctx(a, a);
  std::vector<u64> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = (p_ - a.c_[i]) % p_;
  return wrap(std::move(r));
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  check_ctx(a, b);
  if (n_ == 1) {
    return wrap({mulm(a.c_[0], b.c_[0], p_)});
  }
  std::vector<u64> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i + j] = addm(prod[i + j], mulm(a.c_[i], b.c_[j], p_), p_);
    }
  }
  // Fold degrees >= n down with x^n == sum neg_mod_[i] x^i.
  for (unsigned d = 2 * n_ - 2; d >= n_; --d) {
    const u64 t = prod[d];
    if (t == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < n_; ++i) {
      if (neg_mod_[i] == 0) continue;
      prod[d - n_ + i] = addm(prod[d - n_ + i], mulm(t, neg_mod_[i], p_), p_);
    }
  }
  prod.resize(n_);
  return wrap(std::move(prod));
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  check_ctx(a, a);
  if (a.is_zero()) throw division_by_zero("inverse of zero");
  if (n_ == 1) return wrap({invm(a.c_[0], p_)});
  // Extended Euclid on (modulus, a) in F_p[x].
  Poly r0 = mod_;
  Poly r1(a.c_);
  trim(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1, p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(std::move(s0), poly_mul(q, s1, p_), p_);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  assert(poly_degree(r0) == 0);  // modulus irreducible, a nonzero
  const u64 scale = invm(r0[0], p_);
  std::vector<u64> out(n_, 0);
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = mulm(s0[i], scale, p_);
  return wrap(std::move(out));
}

FieldElement FieldCtx::div(const FieldElement& a, const FieldElement& b) const {
  check_ctx(a, b);
  return mul(a, inv(b));
}

FieldElement FieldCtx::pow(const FieldElement& a, u64 exponent) const {
  check_ctx(a, a);
  FieldElement base = a;
  FieldElement result = one();
  while (exponent != 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

FieldElement FieldElement::pow(u64 exponent) const {
  return ctx_->pow(*this, exponent);
}

FieldElement FieldElement::inverse() const { return ctx_->inv(*this); }

std::string FieldElement::to_string(char var) const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return a.ctx_->add(a, b);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a.ctx_->sub(a, b);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return a.ctx_->mul(a, b);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a.ctx_->div(a, b);
}
FieldElement operator-(const FieldElement& a) { return a.ctx_->neg(a); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.ctx_->compatible_with(*b.ctx_) && a.c_ == b.c_;
}

std::vector<FieldElement> solve_in_field(const std::vector<u64>& poly,
                                         const FieldCtxPtr& ctx) {
  Poly f(poly);
  for (auto& c : f) c %= ctx->p();
  trim(f);
  if (f.empty()) throw error("solve_in_field requires a nonzero polynomial");
  std::vector<FieldElement> roots;
  for (const FieldElement& x : ctx->enumerate()) {
    FieldElement acc = ctx->zero();
    for (std::size_t i = f.size(); i-- > 0;) {
      acc = acc * x + ctx->from_residue(f[i]);
    }
    if (acc.is_zero()) roots.push_back(x);
  }
  return roots;
}

}  // namespace curvezeta
