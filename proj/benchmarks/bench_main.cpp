#include <benchmark/benchmark.h>

#include "henon/arch_green.hpp"
#include "henon/heights.hpp"
#include "henon/map_io.hpp"
#include "henon/measure.hpp"
#include "henon/periodic.hpp"
#include "henon/sweep.hpp"

using namespace henon;

namespace {

HenonMap quad(const char* c0, const char* delta) {
  return HenonMap::single(UniPoly({parse_rational(c0), Rational(0), Rational(1)}), parse_rational(delta));
}

HenonFamily family(const char* text) { return parse_family(text); }

}  // namespace

static void BM_GreenEscaping(benchmark::State& state) {
  GreenFunction G(quad("-1", "3/10"));
  NumericPoint q{{1.7, 0.2}, {2.1, -0.4}};
  for (auto _ : state) benchmark::DoNotOptimize(G.total(q));
}
BENCHMARK(BM_GreenEscaping);

static void BM_GreenBounded(benchmark::State& state) {
  GreenFunction G(quad("1/2", "1/2"));
  NumericPoint q{{1, 0}, {1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(G.total(q));
}
BENCHMARK(BM_GreenBounded);

static void BM_CanonicalHeight(benchmark::State& state) {
  HenonMap f = quad("0", "1");
  ExactPoint q{0, parse_rational("1/3")};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_height(f, q, 1e-8));
}
BENCHMARK(BM_CanonicalHeight);

static void BM_PeriodicModP(benchmark::State& state) {
  HenonMap f = quad("-1", "3/10");
  const auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_modp(f, p));
}
BENCHMARK(BM_PeriodicModP)->Arg(101)->Arg(1009);

static void BM_RationalPeriodic(benchmark::State& state) {
  HenonMap f = quad("1/2", "1/2");
  for (auto _ : state) benchmark::DoNotOptimize(rational_periodic_points(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RationalPeriodic)->Arg(4)->Arg(8);

static void BM_PeriodicNumeric(benchmark::State& state) {
  HenonMap f = quad("-1", "3/10");
  NumericOptions o;
  o.threads = 1;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_numeric(f, n, 1e-10, 64 * n, 1, o));
}
BENCHMARK(BM_PeriodicNumeric)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Resultant(benchmark::State& state) {
  HenonMap f = quad("-7/5", "3/10");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points_exact_resultant(f, n));
}
BENCHMARK(BM_Resultant)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_IntroSweep(benchmark::State& state) {
  HenonFamily F = family(R"({"factors": [{"poly": [["0", "1"], ["0"], ["1"]], "delta": ["1/2"]}]})");
  HenonFamily G = family(R"({"factors": [{"poly": [["0"], ["0"], ["1"]], "delta": ["1/2", "1"]}]})");
  std::vector<Rational> params = parse_params("-3:3:1/4");
  SweepOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_common_periodic(F, G, params, 2, 1e-6, 1, o));
}
BENCHMARK(BM_IntroSweep)->Unit(benchmark::kMillisecond);

static void BM_MeasureDiscrepancy(benchmark::State& state) {
  MeasureSample s = measure_from_periodic(quad("-1", "3/10"), 7, 1e-10, 800, 1);
  for (auto _ : state) benchmark::DoNotOptimize(measure_discrepancy(s, s));
}
BENCHMARK(BM_MeasureDiscrepancy);

BENCHMARK_MAIN();
