#include <benchmark/benchmark.h>

#include "polydual/catalog.hpp"
#include "polydual/duality.hpp"
#include "polydual/k3_invariants.hpp"
#include "polydual/verify.hpp"

using namespace polydual;

namespace {

const CatalogEntry& row(const char* table, const char* label) {
  for (const auto& e : catalog_table(table))
    if (e.label == label) return e;
  throw std::runtime_error(label);
}

void BM_DualSearch(benchmark::State& state, const char* w) {
  const WeightSystem ws = parse_weight_system(w);
  for (auto _ : state) benchmark::DoNotOptimize(dual_search(ws));
}
BENCHMARK_CAPTURE(BM_DualSearch, e12, "6,14,21;42");
BENCHMARK_CAPTURE(BM_DualSearch, w10, "2,3,6;12");
BENCHMARK_CAPTURE(BM_DualSearch, quartic, "1,1,1;4");

void BM_PolarDual(benchmark::State& state) {
  const auto p = *entry_polytope(row("example-441", "Delta"));
  for (auto _ : state) benchmark::DoNotOptimize(polar_dual(p));
}
BENCHMARK(BM_PolarDual);

void BM_LatticePoints(benchmark::State& state) {
  const auto p = full_newton_polytope(parse_weight_system("6,14,21;42"));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p));
}
BENCHMARK(BM_LatticePoints);

void BM_RankTriple(benchmark::State& state) {
  const auto p = *entry_polytope(row("example-442", "Delta_1"));
  for (auto _ : state) benchmark::DoNotOptimize(rank_triple(p));
}
BENCHMARK(BM_RankTriple);

void BM_Equivalence(benchmark::State& state) {
  const auto p = polar_dual(*entry_polytope(row("example-442", "Delta_1")));
  const auto q = *entry_polytope(row("example-442", "Delta_6"));
  for (auto _ : state) benchmark::DoNotOptimize(are_lattice_equivalent(p, q));
}
BENCHMARK(BM_Equivalence);

void BM_VerifyTable(benchmark::State& state, const char* id) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_table(id));
}
BENCHMARK_CAPTURE(BM_VerifyTable, arnold14, "arnold14")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyTable, thm439, "thm439-polytopes")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
