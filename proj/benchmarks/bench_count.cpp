// Copyright 2026 The curvezeta authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <curvezeta/curve.hpp>

using namespace curvezeta;

static void BM_CountKleinF2(benchmark::State& state) {
  const auto curve = PlaneCurve::parse("x^3*y + y^3*z + z^3*x", 2);
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto n = count_points(curve, r);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CountKleinF2)->DenseRange(3, 7);

static void BM_CountKleinF5(benchmark::State& state) {
  const auto curve = PlaneCurve::parse("x^3*y + y^3*z + z^3*x", 5);
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto n = count_points(curve, r);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CountKleinF5)->DenseRange(1, 3);

static void BM_ClassifyCubics(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto groups = classify_weierstrass_cubics(p);
    benchmark::DoNotOptimize(groups);
  }
}
BENCHMARK(BM_ClassifyCubics)->Arg(2)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
