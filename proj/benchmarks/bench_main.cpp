#include <benchmark/benchmark.h>

#include "gl2lab/census.hpp"
#include "gl2lab/classifier.hpp"
#include "gl2lab/families.hpp"
#include "gl2lab/group_spec.hpp"
#include "gl2lab/orbits.hpp"
#include "gl2lab/subgroup_lattice.hpp"

using namespace gl2lab;
using K = FamilyTag::Kind;

namespace {

void BM_ClosureGL2(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const auto gens = standard_group(K::GL2, l).generators();
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::generate(l, gens).order());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gl2_order(l)));
}
BENCHMARK(BM_ClosureGL2)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_CycOrbits(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const auto g = standard_group(K::Gell, l);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_decomposition(g, ActionSpace::cyclic(l)).orbits.size());
}
BENCHMARK(BM_CycOrbits)->Arg(11)->Arg(31)->Arg(101);

void BM_VectorOrbits(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const auto g = standard_group(K::NonsplitCartan, l);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_decomposition(g, ActionSpace::vectors(l)).orbits.size());
}
BENCHMARK(BM_VectorOrbits)->Arg(11)->Arg(31)->Arg(101);

void BM_NsCensus(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ns_subgroups(l).size());
}
BENCHMARK(BM_NsCensus)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_BorelCensus(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_borel_nondiag(l).size());
}
BENCHMARK(BM_BorelCensus)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_SubgroupLattice(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const auto ns = standard_group(K::SplitNormalizer, l);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(ns).size());
}
BENCHMARK(BM_SubgroupLattice)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_LatticeGL2Z4(benchmark::State& state) {
  const auto g = parse_group_spec("gen(4;[[1,1],[0,1]],[[0,1],[1,0]],[[3,0],[0,1]])");
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g).size());
}
BENCHMARK(BM_LatticeGL2Z4)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto l = static_cast<std::uint32_t>(state.range(0));
  const auto g = conjugate(standard_group(K::NonsplitNormalizer, l), Mat2::make(l, 1, 2, 3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(classify(g).labels.size());
}
BENCHMARK(BM_Classify)->Arg(11)->Arg(31);

}  // namespace

BENCHMARK_MAIN();
