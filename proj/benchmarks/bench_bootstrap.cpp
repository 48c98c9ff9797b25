// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <curvezeta/bounds.hpp>
#include <curvezeta/zeta.hpp>

using namespace curvezeta;

// Horizon sweep on the Klein quartic data; entries grow to q^k, so this
// also exercises the bignum layer.
static void BM_Bootstrap(benchmark::State& state) {
  const auto q = PrimePower::from_value(2);
  const std::vector<mpz_class> counts{3, 5, 24};
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto result = bootstrap_counts(q, counts, k);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Bootstrap)->Arg(64)->Arg(256)->Arg(1024);

static void BM_SeriesCheck(benchmark::State& state) {
  const auto q = PrimePower::from_value(2);
  const auto run =
      bootstrap_counts(q, {3, 5, 24}, static_cast<unsigned>(state.range(0)));
  const auto counts = run.counts();
  for (auto _ : state) {
    auto ok = zeta_series_check(q, run.zeta, counts);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_SeriesCheck)->Arg(64)->Arg(256);

static void BM_DeuringSet(benchmark::State& state) {
  const auto q = PrimePower::from_parts(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto set = deuring_set(q);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_DeuringSet)->Arg(10)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
