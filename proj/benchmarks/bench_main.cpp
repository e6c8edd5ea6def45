#include <benchmark/benchmark.h>

#include "coadjoint/character.hpp"
#include "coadjoint/sphere_action.hpp"
#include "coadjoint/sun_orbits.hpp"

using namespace coadjoint;

namespace {

const char* const kTypes[] = {"A2", "D4", "F4", "E6", "E8"};

void BM_BuildRootSystem(benchmark::State& state) {
  const CartanType t = CartanType::parse(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(t));
  state.SetLabel(t.to_string());
}
BENCHMARK(BM_BuildRootSystem)->DenseRange(0, 4);

void BM_Center(benchmark::State& state) {
  const RootSystem rs(CartanType::parse(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(CenterGroup(rs));
  state.SetLabel(rs.type().to_string());
}
BENCHMARK(BM_Center)->DenseRange(0, 4);

void BM_KappaTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RootSystem rs(CartanType({{'A', n - 1}}));
  const CenterGroup cg(rs);
  std::vector<Rational> eta(static_cast<std::size_t>(n - 1), Rational(1));
  const OrbitDatum od(rs, RationalWeight(eta));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_on_center(od, cg));
}
BENCHMARK(BM_KappaTable)->Arg(3)->Arg(6)->Arg(9);

void BM_WeylOracle(benchmark::State& state) {
  const RootSystem rs(CartanType::parse(state.range(0) == 0 ? "A2" : "A3"));
  const CenterGroup cg(rs);
  const OrbitDatum od(rs, RationalWeight(rs.rho()));
  const CenterElement z = cg.generators().front();
  for (auto _ : state) benchmark::DoNotOptimize(kappa_via_weyl_oracle(od, z, cg));
}
BENCHMARK(BM_WeylOracle)->Arg(0)->Arg(1);

void BM_SunSweep(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t coprime = 0;
    for (const auto& s : enumerate_sun_specs(2, static_cast<int>(state.range(0)), -3, 3))
      coprime += pi1_bound_sun(s).coprime;
    benchmark::DoNotOptimize(coprime);
  }
}
BENCHMARK(BM_SunSweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SphereSweep(benchmark::State& state) {
  const SphereOrbit orbit(-3);
  const RotationLoop loop = cartan_loop(orbit, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(base_point_sweep(orbit, loop, 10));
}
BENCHMARK(BM_SphereSweep)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
