#include "einstrength/charset.hpp"
#include "einstrength/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace einstrength;

namespace {

void BM_PhiForwardLeaders(benchmark::State& state) {
  LatticeSet a(Ambient::Integers, 2, {{2, 0}, {-1, 1}, {1, -1}, {-2, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(phi(a));
}
BENCHMARK(BM_PhiForwardLeaders);

void BM_OmegaAntichain(benchmark::State& state) {
  const long q = state.range(0);
  std::vector<Coords> pts;
  for (long i = 0; i < q; ++i) pts.push_back({i, q - 1 - i, (i * 7) % q});
  LatticeSet e(Ambient::Naturals, 3, pts);
  for (auto _ : state) benchmark::DoNotOptimize(omega(e));
}
BENCHMARK(BM_OmegaAntichain)->DenseRange(4, 16, 4);

void BM_Strength(benchmark::State& state, const char* name, SchemeKind s) {
  CatalogEntry e = catalog_lookup(name);
  const auto& sys = e.form(s);
  const Ranking rk = e.ranking.at(s);
  for (auto _ : state) benchmark::DoNotOptimize(strength_of_system(sys, rk));
}
BENCHMARK_CAPTURE(BM_Strength, diffusion_forward, "diffusion", SchemeKind::Forward);
BENCHMARK_CAPTURE(BM_Strength, diffusion_cn, "diffusion", SchemeKind::CrankNicholson);
BENCHMARK_CAPTURE(BM_Strength, fisher_symmetric, "fisher", SchemeKind::Symmetric);
BENCHMARK_CAPTURE(BM_Strength, reaction_cn, "reaction-kinetics", SchemeKind::CrankNicholson);
BENCHMARK_CAPTURE(BM_Strength, chromatography_forward, "chromatography", SchemeKind::Forward);

void BM_GridStrength(benchmark::State& state) {
  GridInstance g;
  g.system = catalog_lookup("diffusion").form(SchemeKind::CrankNicholson);
  std::map<std::string, Rational> v;
  for (int i = 1; i <= 5; ++i) v["a_" + std::to_string(i)] = Rational(2 * i + 1, i + 2);
  for (auto& p : g.system.polynomials) p = p.bind(v);
  g.r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(grid_strength(g));
}
BENCHMARK(BM_GridStrength)->DenseRange(1, 4);

void BM_CountW(benchmark::State& state) {
  LatticeSet a(Ambient::Integers, 3, {{2, 0, 1}, {-1, 1, 0}, {0, -2, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(count_W(a, state.range(0)));
}
BENCHMARK(BM_CountW)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
