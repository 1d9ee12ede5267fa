#include <benchmark/benchmark.h>

#include "ultraposet/corpus.hpp"
#include "ultraposet/duality.hpp"

namespace {

upo::DistLattice boolean_cube(int n) {
  return upo::downset_lattice(upo::make_antichain(n));
}

void BM_Downsets(benchmark::State& state) {
  upo::DistLattice cube = boolean_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::downsets(cube.poset));
  }
}
BENCHMARK(BM_Downsets)->Arg(3)->Arg(4)->Arg(5);

void BM_PrimeIdeals(benchmark::State& state) {
  upo::DistLattice cube = boolean_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::prime_ideals(cube));
  }
}
BENCHMARK(BM_PrimeIdeals)->Arg(3)->Arg(4)->Arg(5);

void BM_LatticeHoms(benchmark::State& state) {
  upo::DistLattice cube = boolean_cube(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::lattice_homs(cube, cube));
  }
}
BENCHMARK(BM_LatticeHoms);

void BM_CheckAxiomsCanonical(benchmark::State& state) {
  upo::Ultraposet u = upo::canonical_ultraposet(boolean_cube(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::check_axioms(u));
  }
}
BENCHMARK(BM_CheckAxiomsCanonical)->Arg(2)->Arg(3)->Arg(4);

void BM_ModSpectrum(benchmark::State& state) {
  upo::DistLattice cube = boolean_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::mod_spectrum(cube));
  }
}
BENCHMARK(BM_ModSpectrum)->Arg(3)->Arg(4)->Arg(5);

void BM_KleisliPair(benchmark::State& state) {
  std::vector<upo::Ultrafilter> beta = upo::enumerate_ultrafilters(4);
  upo::UltraFamily family({beta[1], beta[3], beta[0], beta[2]});
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::kleisli_pair(family, beta[2]));
  }
}
BENCHMARK(BM_KleisliPair);

void BM_CorpusGeneration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::corpus_lattices(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CorpusGeneration)->Arg(4)->Arg(5);

void BM_Counit(benchmark::State& state) {
  upo::DistLattice cube = boolean_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::counit(cube));
  }
}
BENCHMARK(BM_Counit)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
