// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <curvezeta/finite_field.hpp>

using namespace curvezeta;

static void BM_FieldMul(benchmark::State& state) {
  const auto ctx = FieldCtx::create(static_cast<std::uint64_t>(state.range(0)),
                                    static_cast<unsigned>(state.range(1)));
  const auto a = ctx->element_from_index(ctx->order_u64() - 2);
  auto b = ctx->generator() + ctx->one();
  for (auto _ : state) {
    b = a * b;
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_FieldMul)->Args({2, 8})->Args({5, 4})->Args({7, 3})->Args({8191, 1});

static void BM_FieldInverse(benchmark::State& state) {
  const auto ctx = FieldCtx::create(static_cast<std::uint64_t>(state.range(0)),
                                    static_cast<unsigned>(state.range(1)));
  const auto a = ctx->generator() + ctx->one();
  for (auto _ : state) {
    auto inv = a.inverse();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_FieldInverse)->Args({2, 8})->Args({5, 4});

static void BM_FindIrreducible(benchmark::State& state) {
  for (auto _ : state) {
    auto mod = find_irreducible(2, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(mod);
  }
}
BENCHMARK(BM_FindIrreducible)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
