// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cassert>

#include "curvezeta/curve.hpp"

namespace curvezeta {
namespace {

// Work estimate in point evaluations for one extension degree.
mpz_class stratum_work(const PlaneCurve& curve, unsigned r) {
  mpz_class q_r;
  mpz_ui_pow_ui(q_r.get_mpz_t(), static_cast<unsigned long>(curve.p()), r);
  return q_r * q_r + q_r + 1;
}

void check_budget(const mpz_class& work, std::uint64_t budget) {
  if (work > mpz_class(static_cast<unsigned long>(budget))) {
    throw budget_exceeded("enumeration needs " + work.get_str() +
                          " point evaluations, budget is " +
                          std::to_string(budget));
  }
}

// Evaluator for the affine stratum z = 1: for fixed x the curve becomes a
// polynomial in y of degree <= deg; its coefficients are assembled once
// per x and the inner loop is a Horner evaluation.
class AffineEvaluator {
 public:
  AffineEvaluator(const PlaneCurve& curve, const FieldCtxPtr& ctx)
      : ctx_(ctx), max_dy_(0), max_dx_(0) {
    for (const auto& t : curve.terms()) {
      max_dy_ = std::max(max_dy_, t.dy);
      max_dx_ = std::max(max_dx_, t.dx);
    }
    by_dy_.resize(max_dy_ + 1);
    for (const auto& t : curve.terms()) by_dy_[t.dy].push_back(&t);
  }

  // Rebuilds the y-polynomial for this x.
  void set_x(const FieldElement& x) {
    std::vector<FieldElement> xpow;
    xpow.reserve(max_dx_ + 1);
    xpow.push_back(ctx_->one());
    for (unsigned i = 1; i <= max_dx_; ++i) xpow.push_back(xpow.back() * x);

    y_coeffs_.clear();
    for (unsigned dy = 0; dy <= max_dy_; ++dy) {
      FieldElement acc = ctx_->zero();
      if (dy < by_dy_.size()) {
        for (const CurveTerm* t : by_dy_[dy]) {
          acc = acc + ctx_->from_residue(t->coeff) * xpow[t->dx];
        }
      }
      y_coeffs_.push_back(std::move(acc));
    }
  }

  bool vanishes_at(const FieldElement& y) const {
    FieldElement acc = y_coeffs_.back();
    for (std::size_t i = y_coeffs_.size() - 1; i-- > 0;) {
      acc = acc * y + y_coeffs_[i];
    }
    return acc.is_zero();
  }

 private:
  FieldCtxPtr ctx_;
  unsigned max_dy_;
  unsigned max_dx_;
  std::vector<std::vector<const CurveTerm*>> by_dy_;
  std::vector<FieldElement> y_coeffs_;
};

// F(x, 1, 0): only the dz == 0 terms survive, as a polynomial in x.
std::vector<std::uint64_t> line_at_infinity_poly(const PlaneCurve& curve) {
  std::vector<std::uint64_t> poly;
  for (const auto& t : curve.terms()) {
    if (t.dz != 0) continue;
    if (poly.size() <= t.dx) poly.resize(t.dx + 1, 0);
    poly[t.dx] = (poly[t.dx] + t.coeff) % curve.p();
  }
  return poly;
}

bool vanishes_at_unit_x(const PlaneCurve& curve) {
  // F(1, 0, 0) is the coefficient of x^degree.
  for (const auto& t : curve.terms()) {
    if (t.dy == 0 && t.dz == 0) return false;
  }
  return true;
}

FieldElement eval_fp_poly(const std::vector<std::uint64_t>& poly,
                          const FieldElement& x, const FieldCtxPtr& ctx) {
  FieldElement acc = ctx->zero();
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = acc * x + ctx->from_residue(poly[i]);
  }
  return acc;
}

// Formal partial derivative with respect to variable 0 (x), 1 (y), 2 (z).
std::vector<CurveTerm> partial_derivative(const PlaneCurve& curve,
                                          unsigned var) {
  std::vector<CurveTerm> out;
  for (const auto& t : curve.terms()) {
    CurveTerm d = t;
    unsigned* exp = var == 0 ? &d.dx : var == 1 ? &d.dy : &d.dz;
    if (*exp == 0) continue;
    d.coeff = (t.coeff * (*exp % curve.p())) % curve.p();
    if (d.coeff == 0) continue;
    --*exp;
    out.push_back(d);
  }
  return out;
}

FieldElement eval_terms(const std::vector<CurveTerm>& terms,
                        const FieldElement& x, const FieldElement& y,
                        const FieldElement& z, const FieldCtxPtr& ctx) {
  FieldElement acc = ctx->zero();
  for (const auto& t : terms) {
    FieldElement v = ctx->from_residue(t.coeff);
    if (t.dx != 0) v = v * x.pow(t.dx);
    if (t.dy != 0) v = v * y.pow(t.dy);
    if (t.dz != 0) v = v * z.pow(t.dz);
    acc = acc + v;
  }
  return acc;
}

}  // namespace

mpz_class count_points(const PlaneCurve& curve, unsigned r,
                       std::uint64_t budget, unsigned slices) {
  if (r == 0) throw error("extension degree must be at least 1");
  if (slices == 0) throw error("slices must be at least 1");
  check_budget(stratum_work(curve, r), budget);

  const auto ctx = FieldCtx::create(curve.p(), r);
  const std::uint64_t q_r = ctx->order_u64();
  const auto elements = ctx->enumerate();

  mpz_class count = 0;
  AffineEvaluator eval(curve, ctx);
  // Affine stratum (x, y, 1), split into contiguous x-chunks. Chunked and
  // sequential enumeration visit identical points, so any slicing yields
  // the same count.
  for (unsigned s = 0; s < slices; ++s) {
    const auto begin = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(q_r) * s / slices);
    const auto end = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(q_r) * (s + 1) / slices);
    mpz_class chunk = 0;
    for (std::uint64_t ix = begin; ix < end; ++ix) {
      eval.set_x(elements[ix]);
      for (std::uint64_t iy = 0; iy < q_r; ++iy) {
        if (eval.vanishes_at(elements[iy])) ++chunk;
      }
    }
    count += chunk;
  }

  // Stratum (x, 1, 0).
  const auto infinity_poly = line_at_infinity_poly(curve);
  for (std::uint64_t ix = 0; ix < q_r; ++ix) {
    if (infinity_poly.empty() ||
        eval_fp_poly(infinity_poly, elements[ix], ctx).is_zero()) {
      ++count;
    }
  }

  // The single remaining point (1, 0, 0).
  if (vanishes_at_unit_x(curve)) ++count;
  return count;
}

SmoothnessVerdict smoothness_probe(const PlaneCurve& curve, unsigned r_max,
                                   std::uint64_t budget) {
  if (r_max == 0) throw error("r_max must be at least 1");
  mpz_class work = 0;
  for (unsigned r = 1; r <= r_max; ++r) work += 4 * stratum_work(curve, r);
  check_budget(work, budget);

  const std::vector<CurveTerm> f(curve.terms());
  const std::array<std::vector<CurveTerm>, 3> partials = {
      partial_derivative(curve, 0), partial_derivative(curve, 1),
      partial_derivative(curve, 2)};

  SmoothnessVerdict verdict;
  verdict.r_checked = r_max;
  for (unsigned r = 1; r <= r_max; ++r) {
    const auto ctx = FieldCtx::create(curve.p(), r);
    const auto elements = ctx->enumerate();
    const FieldElement zero_el = ctx->zero();
    const FieldElement one_el = ctx->one();

    auto singular_at = [&](const FieldElement& x, const FieldElement& y,
                           const FieldElement& z) {
      if (!eval_terms(f, x, y, z, ctx).is_zero()) return false;
      for (const auto& d : partials) {
        if (!eval_terms(d, x, y, z, ctx).is_zero()) return false;
      }
      return true;
    };
    auto report = [&](const FieldElement& x, const FieldElement& y,
                      const FieldElement& z) {
      SmoothnessVerdict::SingularPoint pt;
      pt.r = r;
      pt.coords = {x.coeffs(), y.coeffs(), z.coeffs()};
      pt.display = "(" + x.to_string() + " : " + y.to_string() + " : " +
                   z.to_string() + ")";
      verdict.singular = std::move(pt);
      verdict.r_checked = r;
    };

    for (const auto& x : elements) {
      for (const auto& y : elements) {
        if (singular_at(x, y, one_el)) {
          report(x, y, one_el);
          return verdict;
        }
      }
    }
    for (const auto& x : elements) {
      if (singular_at(x, one_el, zero_el)) {
        report(x, one_el, zero_el);
        return verdict;
      }
    }
    if (singular_at(one_el, zero_el, zero_el)) {
      report(one_el, zero_el, zero_el);
      return verdict;
    }
  }
  return verdict;
}

std::string WeierstrassCubic::to_string() const {
  std::string lhs = "y^2";
  auto term = [](std::uint64_t c, const std::string& mono) -> std::string {
    if (c == 0) return "";
    if (c == 1) return " + " + mono;
    return " + " + std::to_string(c) + "*" + mono;
  };
  lhs += term(a1, "x*y");
  lhs += term(a3, "y");
  std::string rhs = "x^3";
  rhs += term(a2, "x^2");
  rhs += term(a4, "x");
  if (a6 != 0) rhs += " + " + std::to_string(a6);
  return lhs + " = " + rhs;
}

PlaneCurve WeierstrassCubic::projective_closure() const {
  auto neg = [this](std::uint64_t c) { return (p - c % p) % p; };
  std::vector<CurveTerm> terms;
  terms.push_back({0, 2, 1, 1});  // y^2 z
  if (a1 % p) terms.push_back({1, 1, 1, a1 % p});
  if (a3 % p) terms.push_back({0, 1, 2, a3 % p});
  terms.push_back({3, 0, 0, p - 1});  // -x^3
  if (neg(a2)) terms.push_back({2, 0, 1, neg(a2)});
  if (neg(a4)) terms.push_back({1, 0, 2, neg(a4)});
  if (neg(a6)) terms.push_back({0, 0, 3, neg(a6)});
  return PlaneCurve::from_terms(p, std::move(terms));
}

std::uint64_t weierstrass_discriminant(const WeierstrassCubic& curve) {
  const std::uint64_t p = curve.p;
  auto mul = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
  };
  auto add = [p](std::uint64_t a, std::uint64_t b) { return (a + b) % p; };
  auto sub = [p](std::uint64_t a, std::uint64_t b) {
    return (a + p - b % p) % p;
  };
  const std::uint64_t a1 = curve.a1 % p, a2 = curve.a2 % p, a3 = curve.a3 % p,
                      a4 = curve.a4 % p, a6 = curve.a6 % p;

  const std::uint64_t b2 = add(mul(a1, a1), mul(4 % p, a2));
  const std::uint64_t b4 = add(mul(2 % p, a4), mul(a1, a3));
  const std::uint64_t b6 = add(mul(a3, a3), mul(4 % p, a6));
  // b8 from the characteristic-free identity (4*b8 = b2*b6 - b4^2 cannot
  // be solved for b8 in characteristic 2).
  std::uint64_t b8 = mul(mul(a1, a1), a6);
  b8 = add(b8, mul(mul(4 % p, a2), a6));
  b8 = sub(b8, mul(mul(a1, a3), a4));
  b8 = add(b8, mul(a2, mul(a3, a3)));
  b8 = sub(b8, mul(a4, a4));

  std::uint64_t delta = 0;
  delta = sub(delta, mul(mul(b2, b2), b8));
  delta = sub(delta, mul(8 % p, mul(b4, mul(b4, b4))));
  delta = sub(delta, mul(27 % p, mul(b6, b6)));
  delta = add(delta, mul(9 % p, mul(b2, mul(b4, b6))));
  return delta;
}

mpz_class weierstrass_count(const WeierstrassCubic& curve, unsigned r,
                            std::uint64_t budget) {
  if (r == 0) throw error("extension degree must be at least 1");
  mpz_class q_r;
  mpz_ui_pow_ui(q_r.get_mpz_t(), static_cast<unsigned long>(curve.p), r);
  check_budget(q_r * q_r + 1, budget);

  const auto ctx = FieldCtx::create(curve.p, r);
  const auto elements = ctx->enumerate();
  const auto a1 = ctx->from_residue(curve.a1);
  const auto a2 = ctx->from_residue(curve.a2);
  const auto a3 = ctx->from_residue(curve.a3);
  const auto a4 = ctx->from_residue(curve.a4);
  const auto a6 = ctx->from_residue(curve.a6);

  mpz_class count = 1;  // the point at infinity
  for (const auto& x : elements) {
    // y^2 + u y = v with u = a1 x + a3, v = x^3 + a2 x^2 + a4 x + a6.
    const FieldElement u = a1 * x + a3;
    const FieldElement v = ((x + a2) * x + a4) * x + a6;
    for (const auto& y : elements) {
      if ((y + u) * y == v) ++count;
    }
  }
  return count;
}

std::map<std::uint64_t, std::vector<WeierstrassCubic>> classify_weierstrass_cubics(
    std::uint64_t p, std::uint64_t budget) {
  mpz_class tuples;
  mpz_ui_pow_ui(tuples.get_mpz_t(), static_cast<unsigned long>(p), 5);
  check_budget(tuples * (mpz_class(static_cast<unsigned long>(p)) *
                             static_cast<unsigned long>(p) +
                         1),
               budget);

  std::map<std::uint64_t, std::vector<WeierstrassCubic>> groups;
  for (std::uint64_t a1 = 0; a1 < p; ++a1) {
    for (std::uint64_t a2 = 0; a2 < p; ++a2) {
      for (std::uint64_t a3 = 0; a3 < p; ++a3) {
        for (std::uint64_t a4 = 0; a4 < p; ++a4) {
          for (std::uint64_t a6 = 0; a6 < p; ++a6) {
            const WeierstrassCubic curve{p, a1, a2, a3, a4, a6};
            if (weierstrass_discriminant(curve) == 0) continue;
            const mpz_class n1 = weierstrass_count(curve, 1, budget);
            groups[n1.get_ui()].push_back(curve);
          }
        }
      }
    }
  }
  return groups;
}

}  // namespace curvezeta
