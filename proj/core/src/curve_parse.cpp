// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <tuple>

#include "curvezeta/curve.hpp"
#include "curvezeta/prime_power.hpp"

namespace curvezeta {
namespace {

constexpr unsigned kMaxExponent = 1u << 20;

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos]))) {
      ++pos;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // Unsigned decimal literal; the caller has checked the first digit.
  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[pos]))) {
      ++pos;
    }
    return mpz_class(std::string(src.substr(start, pos - start)), 10);
  }
};

struct RawTerm {
  unsigned dx = 0, dy = 0, dz = 0;
  mpz_class coeff = 1;
};

// factor := coefficient | var ('^' integer)?
void parse_factor(Lexer& lex, RawTerm& term) {
  const char c = lex.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    term.coeff *= lex.integer();
    return;
  }
  unsigned* exponent = nullptr;
  switch (c) {
    case 'x':
      exponent = &term.dx;
      break;
    case 'y':
      exponent = &term.dy;
      break;
    case 'z':
      exponent = &term.dz;
      break;
    default:
      throw parse_error("expected a coefficient or one of x, y, z", lex.pos);
  }
  ++lex.pos;
  unsigned power = 1;
  if (lex.consume('^')) {
    if (!std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      throw parse_error("expected an integer exponent after '^'", lex.pos);
    }
    const mpz_class e = lex.integer();
    if (e > kMaxExponent) {
      throw parse_error("exponent too large", lex.pos);
    }
    power = static_cast<unsigned>(e.get_ui());
  }
  *exponent += power;
}

// term := factor ('*' factor)*
RawTerm parse_term(Lexer& lex) {
  RawTerm term;
  parse_factor(lex, term);
  while (lex.consume('*')) parse_factor(lex, term);
  return term;
}

std::vector<CurveTerm> combine(std::uint64_t p,
                               const std::vector<RawTerm>& raw) {
  std::map<std::tuple<unsigned, unsigned, unsigned>, std::uint64_t> combined;
  for (const auto& t : raw) {
    mpz_class residue = t.coeff % p;
    if (residue < 0) residue += p;
    auto& slot = combined[{t.dx, t.dy, t.dz}];
    slot = (slot + residue.get_ui()) % p;
  }
  std::vector<CurveTerm> terms;
  for (const auto& [exps, coeff] : combined) {
    if (coeff == 0) continue;
    terms.push_back(CurveTerm{std::get<0>(exps), std::get<1>(exps),
                              std::get<2>(exps), coeff});
  }
  // Descending (dx, dy, dz); the map iterates ascending.
  std::reverse(terms.begin(), terms.end());
  return terms;
}

}  // namespace

PlaneCurve PlaneCurve::parse(std::string_view src, std::uint64_t p) {
  if (!is_probable_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw invalid_prime_power(std::to_string(p) + " is not prime");
  }
  Lexer lex{src};
  if (lex.eof()) throw parse_error("empty curve expression", lex.pos);

  std::vector<RawTerm> raw;
  // An optional leading sign is accepted as a harmless extension.
  bool negate = false;
  if (lex.consume('-')) {
    negate = true;
  } else {
    lex.consume('+');
  }
  while (true) {
    RawTerm term = parse_term(lex);
    if (negate) term.coeff = -term.coeff;
    raw.push_back(std::move(term));
    if (lex.eof()) break;
    if (lex.consume('+')) {
      negate = false;
    } else if (lex.consume('-')) {
      negate = true;
    } else {
      throw parse_error("expected '+', '-' or end of input", lex.pos);
    }
  }

  auto terms = combine(p, raw);
  if (terms.empty()) {
    throw zero_polynomial("all terms cancel modulo " + std::to_string(p));
  }
  const unsigned degree = terms[0].dx + terms[0].dy + terms[0].dz;
  for (const auto& t : terms) {
    if (t.dx + t.dy + t.dz != degree) {
      throw not_homogeneous("terms of total degree " + std::to_string(degree) +
                            " and " + std::to_string(t.dx + t.dy + t.dz) +
                            " are mixed");
    }
  }
  return PlaneCurve(p, degree, std::move(terms));
}

PlaneCurve PlaneCurve::from_terms(std::uint64_t p,
                                  std::vector<CurveTerm> input) {
  if (!is_probable_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw invalid_prime_power(std::to_string(p) + " is not prime");
  }
  std::vector<RawTerm> raw;
  raw.reserve(input.size());
  for (const auto& t : input) {
    raw.push_back(RawTerm{t.dx, t.dy, t.dz,
                          mpz_class(static_cast<unsigned long>(t.coeff))});
  }
  auto terms = combine(p, raw);
  if (terms.empty()) {
    throw zero_polynomial("all terms cancel modulo " + std::to_string(p));
  }
  const unsigned degree = terms[0].dx + terms[0].dy + terms[0].dz;
  for (const auto& t : terms) {
    if (t.dx + t.dy + t.dz != degree) {
      throw not_homogeneous("terms of mixed total degree");
    }
  }
  return PlaneCurve(p, degree, std::move(terms));
}

std::string PlaneCurve::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto append_var = [&mono](char v, unsigned d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    append_var('x', t.dx);
    append_var('y', t.dy);
    append_var('z', t.dz);
    if (t.coeff != 1 || mono.empty()) {
      out += std::to_string(t.coeff);
      if (!mono.empty()) out += "*";
    }
    out += mono;
  }
  return out;
}

}  // namespace curvezeta
