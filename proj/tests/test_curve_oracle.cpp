// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvezeta/bounds.hpp>
#include <curvezeta/curve.hpp>
#include <curvezeta/zeta.hpp>

#include <algorithm>
#include <array>

#include "testdata.hpp"

using namespace curvezeta;

namespace {

PlaneCurve klein(std::uint64_t p) {
  return PlaneCurve::parse(testdata::kKleinEquation, p);
}

PlaneCurve permute(const PlaneCurve& curve, std::array<unsigned, 3> perm) {
  std::vector<CurveTerm> terms;
  for (const auto& t : curve.terms()) {
    const std::array<unsigned, 3> exps{t.dx, t.dy, t.dz};
    terms.push_back(
        CurveTerm{exps[perm[0]], exps[perm[1]], exps[perm[2]], t.coeff});
  }
  return PlaneCurve::from_terms(curve.p(), std::move(terms));
}

}  // namespace

TEST_CASE("parser accepts the Klein quartic") {
  const auto curve = klein(2);
  CHECK(curve.degree() == 4);
  CHECK(curve.terms().size() == 3);
  CHECK(curve.p() == 2);
  for (const auto& t : curve.terms()) CHECK(t.coeff == 1);
}

TEST_CASE("parser normalizes coefficients and whitespace") {
  const auto curve = PlaneCurve::parse("  7*x ^ 2  + 3*y*y + x*x ", 5);
  // 7 x^2 == 2 x^2, plus x^2, gives 3 x^2; 3 y^2 stays.
  REQUIRE(curve.terms().size() == 2);
  CHECK(curve.terms()[0] == CurveTerm{2, 0, 0, 3});
  CHECK(curve.terms()[1] == CurveTerm{0, 2, 0, 3});
  CHECK(curve.degree() == 2);

  // Leading sign and subtraction.
  const auto neg = PlaneCurve::parse("-x + y - z", 5);
  CHECK(neg.terms() ==
        std::vector<CurveTerm>{{1, 0, 0, 4}, {0, 1, 0, 1}, {0, 0, 1, 4}});
}

TEST_CASE("parser error cases") {
  CHECK_THROWS_AS(PlaneCurve::parse("x + x", 2), zero_polynomial);
  CHECK_THROWS_AS(PlaneCurve::parse("x^2 + y", 5), not_homogeneous);
  CHECK_THROWS_AS(PlaneCurve::parse("", 2), parse_error);
  CHECK_THROWS_AS(PlaneCurve::parse("x +", 2), parse_error);
  CHECK_THROWS_AS(PlaneCurve::parse("w^2", 2), parse_error);
  CHECK_THROWS_AS(PlaneCurve::parse("x^", 2), parse_error);
  CHECK_THROWS_AS(PlaneCurve::parse("x^-2", 2), parse_error);
  CHECK_THROWS_AS(PlaneCurve::parse("3**x", 2), parse_error);
  CHECK_THROWS_AS(PlaneCurve::parse("x~y", 2), parse_error);

  // Position annotation points at the offending byte.
  try {
    PlaneCurve::parse("x^3*y + @", 2);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("Klein quartic point counts over F_2 and F_5") {
  const auto c2 = klein(2);
  CHECK(count_points(c2, 1) == 3);
  CHECK(count_points(c2, 2) == 5);
  CHECK(count_points(c2, 3) == 24);

  const auto c5 = klein(5);
  CHECK(count_points(c5, 1) == 6);
  CHECK(count_points(c5, 2) == 26);
}

TEST_CASE("degenerate curves") {
  // The line z = 0 has q + 1 projective points.
  const auto line = PlaneCurve::parse("z", 2);
  CHECK(count_points(line, 1) == 3);
  CHECK(count_points(line, 3) == 9);

  // A smooth conic over F_5 is a projective line: q + 1 points.
  const auto conic = PlaneCurve::parse("x^2 + y^2 + z^2", 5);
  CHECK(count_points(conic, 1) == 6);
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(count_points(klein(2), 8, 1000), budget_exceeded);
  CHECK_NOTHROW(count_points(klein(2), 1, 8));
}

TEST_CASE("counts are invariant under coordinate permutations") {
  const std::array<std::array<unsigned, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto asymmetric = PlaneCurve::parse("x^3*y + y^4 + x*z^3 + z^4", 3);
  for (const auto& curve : {klein(2), asymmetric}) {
    for (unsigned r = 1; r <= 2; ++r) {
      const mpz_class reference = count_points(curve, r);
      for (const auto& perm : perms) {
        CHECK(count_points(permute(curve, perm), r) == reference);
      }
    }
  }
}

TEST_CASE("sliced enumeration equals sequential") {
  const auto c2 = klein(2);
  const mpz_class reference = count_points(c2, 3);
  for (unsigned slices : {2u, 3u, 7u, 16u}) {
    CHECK(count_points(c2, 3, kDefaultBudget, slices) == reference);
  }
  const auto c5 = klein(5);
  CHECK(count_points(c5, 2, kDefaultBudget, 5) == count_points(c5, 2));
}

TEST_CASE("weierstrass counting") {
  const WeierstrassCubic n1{2, 0, 0, 1, 1, 1};  // y^2 + y = x^3 + x + 1
  CHECK(weierstrass_count(n1, 1) == 1);

  const WeierstrassCubic n5{2, 0, 0, 1, 1, 0};  // y^2 + y = x^3 + x
  CHECK(weierstrass_count(n5, 1) == 5);

  const WeierstrassCubic e2{2, 1, 1, 0, 0, 1};  // y^2 + xy = x^3 + x^2 + 1
  CHECK(weierstrass_count(e2, 1) == 2);
  CHECK(weierstrass_count(e2, 2) == 8);
}

TEST_CASE("weierstrass discriminant") {
  CHECK(weierstrass_discriminant({2, 0, 0, 1, 1, 1}) != 0);
  CHECK(weierstrass_discriminant({2, 0, 0, 0, 0, 0}) == 0);  // y^2 = x^3

  int nonsingular = 0;
  for (std::uint64_t code = 0; code < 32; ++code) {
    const WeierstrassCubic curve{2,
                                 (code >> 4) & 1,
                                 (code >> 3) & 1,
                                 (code >> 2) & 1,
                                 (code >> 1) & 1,
                                 code & 1};
    if (weierstrass_discriminant(curve) != 0) ++nonsingular;
  }
  CHECK(nonsingular == 16);

  // 4 b8 == b2 b6 - b4^2 away from characteristic 2.
  const WeierstrassCubic c{101, 7, 11, 13, 17, 19};
  const std::uint64_t p = 101;
  auto m = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
  const std::uint64_t b2 = (m(c.a1, c.a1) + m(4, c.a2)) % p;
  const std::uint64_t b4 = (m(2, c.a4) + m(c.a1, c.a3)) % p;
  const std::uint64_t b6 = (m(c.a3, c.a3) + m(4, c.a6)) % p;
  std::uint64_t b8 = (m(m(c.a1, c.a1), c.a6) + m(m(4, c.a2), c.a6) +
                      p * p - m(m(c.a1, c.a3), c.a4) + m(c.a2, m(c.a3, c.a3)) +
                      p * p - m(c.a4, c.a4)) %
                     p;
  CHECK(m(4, b8) == (m(b2, b6) + p * p - m(b4, b4)) % p);
}

TEST_CASE("classification of normal-form cubics over F_2") {
  const auto groups = classify_weierstrass_cubics(2);
  REQUIRE(groups.size() == 5);
  std::size_t total = 0;
  for (const auto& golden : testdata::kCubicGroupsF2) {
    REQUIRE(groups.count(golden.n1) == 1);
    const auto& members = groups.at(golden.n1);
    CHECK(members.size() == golden.members.size());
    total += members.size();
    for (const auto& tuple : golden.members) {
      const WeierstrassCubic expected{2, tuple.a1, tuple.a2, tuple.a3,
                                      tuple.a4, tuple.a6};
      CHECK(std::count(members.begin(), members.end(), expected) == 1);
    }
  }
  CHECK(total == 16);
}

TEST_CASE("classification counts land in the Deuring set") {
  for (std::uint64_t p : {2ull, 3ull}) {
    const auto groups = classify_weierstrass_cubics(p);
    const auto q = PrimePower::from_value(static_cast<long>(p));
    const auto admissible = deuring_set(q);
    for (const auto& [n1, members] : groups) {
      CHECK(std::count(admissible.begin(), admissible.end(),
                       mpz_class(static_cast<unsigned long>(n1))) == 1);
      CHECK(!members.empty());
    }
  }
}

TEST_CASE("weierstrass counts agree with the plane-curve oracle") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    const auto groups = classify_weierstrass_cubics(p);
    // Check one representative per group to keep this cheap.
    for (const auto& [n1, members] : groups) {
      const auto& curve = members.front();
      const auto closure = curve.projective_closure();
      for (unsigned r = 1; r <= 2; ++r) {
        CHECK(count_points(closure, r) == weierstrass_count(curve, r));
      }
    }
  }
}

TEST_CASE("smoothness probe") {
  const auto verdict = smoothness_probe(klein(2), 3);
  CHECK(verdict.clean());
  CHECK(verdict.r_checked == 3);

  const auto cusp = smoothness_probe(PlaneCurve::parse("x^3", 2), 1);
  REQUIRE(!cusp.clean());
  CHECK(cusp.singular->r == 1);
  // Every point of the triple line x = 0 is singular; the scan finds
  // (0 : 0 : 1) first.
  CHECK(cusp.singular->coords[0] == std::vector<std::uint64_t>{0});
  CHECK(cusp.singular->display == "(0 : 0 : 1)");

  const auto conic = smoothness_probe(PlaneCurve::parse("x^2 + y^2 + z^2", 5), 1);
  CHECK(conic.clean());

  // A singular Weierstrass closure is caught.
  const auto cuspidal = WeierstrassCubic{2, 0, 0, 0, 0, 0}.projective_closure();
  CHECK(!smoothness_probe(cuspidal, 1).clean());
}

TEST_CASE("curve rendering round-trips through the parser") {
  const auto curve = klein(5);
  const auto again = PlaneCurve::parse(curve.to_string(), 5);
  CHECK(again.terms() == curve.terms());
  const WeierstrassCubic e{5, 1, 2, 3, 4, 0};
  CHECK(e.to_string() == "y^2 + x*y + 3*y = x^3 + 2*x^2 + 4*x");
}
