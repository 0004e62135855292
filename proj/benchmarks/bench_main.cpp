#include <benchmark/benchmark.h>

#include "monopole/dtilde.hpp"
#include "monopole/flows.hpp"
#include "monopole/leaves.hpp"
#include "monopole/poisson.hpp"
#include "monopole/sampling.hpp"

using namespace monopole;

namespace {

ChartPoint point_for(const char* name, std::vector<int> alpha) {
  Sampler s(1);
  return s.chart_point(CartanDatum::from_name(name), Degree(std::move(alpha)));
}

void BM_JacobiScan(benchmark::State& state) {
  const auto pt = point_for("A3", {2, 2, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_scan(pt));
  state.SetLabel(std::to_string(pt.layout().size()) + " coords");
}
BENCHMARK(BM_JacobiScan)->DenseRange(0, 2);

void BM_BivectorAssembly(benchmark::State& state) {
  const auto pt = point_for("G2", {3, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(bivector_matrix(pt));
}
BENCHMARK(BM_BivectorAssembly)->Arg(1)->Arg(3);

void BM_InverseIdentity(benchmark::State& state) {
  const auto pt = point_for("B2", {3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_matrix(pt) * bivector_matrix(pt));
}
BENCHMARK(BM_InverseIdentity);

void BM_AntisymQuotient(benchmark::State& state) {
  Sampler s(2);
  const int deg = static_cast<int>(state.range(0));
  const Poly p = s.polynomial(deg), q = s.polynomial(deg);
  for (auto _ : state) benchmark::DoNotOptimize(antisym_quotient(p, q));
}
BENCHMARK(BM_AntisymQuotient)->Arg(4)->Arg(8);

void BM_Oracle(benchmark::State& state) {
  const auto pt = point_for("A2", {3, 3});
  std::vector<std::vector<Rat>> roots{pt.x_block(0), pt.x_block(1)};
  for (auto _ : state) benchmark::DoNotOptimize(DTildeOracle(to_polys(pt), roots));
}
BENCHMARK(BM_Oracle);

void BM_RK4(benchmark::State& state) {
  Sampler s(3);
  const auto pt = s.complex_chart_point(CartanDatum::from_name("A2"), Degree({2, 1}));
  const auto h = Hamiltonian::parse("e:2:1 + e:1:1*e:1:2", pt.layout());
  for (auto _ : state) benchmark::DoNotOptimize(integrate(h, pt, 1.0, 1e-3));
}
BENCHMARK(BM_RK4)->Unit(benchmark::kMillisecond);

void BM_Leaves(benchmark::State& state) {
  const ParabolicDatum pd(CartanDatum::from_name("A3"), {false, true, true}, Degree({4, 0, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_special_lifts(pd, LiftConvention::lemma));
}
BENCHMARK(BM_Leaves);

}  // namespace

BENCHMARK_MAIN();
