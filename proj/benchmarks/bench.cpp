#include <benchmark/benchmark.h>

#include "polyadic/ideal.hpp"
#include "polyadic/measure.hpp"
#include "polyadic/number.hpp"

namespace {

using namespace polyadic;

void BM_EmbedFactorial(benchmark::State& state) {
  TowerPtr tower = ModulusTower::factorial(static_cast<unsigned>(state.range(0)));
  Int a = 123456789;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PolyadicNumber::embed(tower, a));
  }
}
BENCHMARK(BM_EmbedFactorial)->Arg(8)->Arg(16)->Arg(32);

void BM_NormInteger(benchmark::State& state) {
  TowerPtr tower = ModulusTower::factorial(8);
  Int a = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(norm(*tower, a));
  }
}
BENCHMARK(BM_NormInteger)->Arg(720)->Arg(1000003);

void BM_GcdCertificate(benchmark::State& state) {
  TowerPtr tower = ModulusTower::factorial(static_cast<unsigned>(state.range(0)));
  PolyadicNumber a = PolyadicNumber::embed(tower, 987654);
  PolyadicNumber b = PolyadicNumber::embed(tower, 123456);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd_certificate(a, b));
  }
}
BENCHMARK(BM_GcdCertificate)->Arg(8)->Arg(16);

void BM_NuStar(benchmark::State& state) {
  TowerPtr tower = ModulusTower::factorial(8);
  EventuallyPeriodicSet s = parse_set_expression("AP(1,6) | AP(0,10) & ~AP(3,4)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nu_star(s, *tower));
  }
}
BENCHMARK(BM_NuStar);

void BM_CountIncongruent(benchmark::State& state) {
  TowerPtr tower = ModulusTower::factorial(8);
  EventuallyPeriodicSet s = parse_set_expression("AP(1,6) | {4,9,25}");
  Int m = tower->top_modulus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_incongruent(s, m));
  }
}
BENCHMARK(BM_CountIncongruent);

}  // namespace

BENCHMARK_MAIN();
