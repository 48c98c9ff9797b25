// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <gmpxx.h>

#include <vector>

namespace curvezeta::cli {

using ordered_json = nlohmann::ordered_json;

// Exact integers are emitted as JSON numbers while they are safe for
// double-based consumers (|v| <= 2^53) and as decimal strings beyond.
// Rationals with a denominator are always "num/den" strings. No payload
// ever contains a float.
inline ordered_json enc(const mpz_class& v) {
  static const mpz_class kSafeLimit("9007199254740992");  // 2^53
  if (abs(v) <= kSafeLimit) {
    return ordered_json(static_cast<std::int64_t>(v.get_si()));
  }
  return ordered_json(v.get_str());
}

inline ordered_json enc(const mpq_class& v) {
  if (v.get_den() == 1) return enc(mpz_class(v.get_num()));
  return ordered_json(v.get_str());
}

template <typename T>
ordered_json enc_list(const std::vector<T>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(enc(v));
  return arr;
}

}  // namespace curvezeta::cli
