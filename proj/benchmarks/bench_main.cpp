#include "houghton/centralizer.hpp"
#include "houghton/conjugacy.hpp"
#include "houghton/fsym.hpp"
#include "houghton/intlinalg.hpp"
#include "houghton/word.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace houghton;

namespace {

Element E(const std::string& w, int n) { return element_from_text(w, n); }

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Element g = E(n == 2 ? "g2 ((1,1)(2,3)) g2 ((1,2)(1,4))" : "g2 g3^-1 ((1,1)(3,2)) g3 ((2,1)(1,4))", n);
  const Element h = invert(g);
  for (auto _ : state) benchmark::DoNotOptimize(compose(g, h));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(3);

void BM_ParseWord(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(element_from_text("g2 g3^-2 ((1,1)(3,2)) r[2,1,3] g2^3", 3));
}
BENCHMARK(BM_ParseWord);

void BM_ConjugateHn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Element a = E(n == 2 ? "g2 ((1,1)(2,2))" : "g2 g3 ((2,1)(3,2))", n);
  const Element x = E(n == 2 ? "g2^2 ((1,1)(2,1))" : "g3^-1 ((1,2)(2,1))", n);
  const Element b = conjugate(a, x);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_in_hn(a, b));
}
BENCHMARK(BM_ConjugateHn)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NonConjugateHn(benchmark::State& state) {
  const Element a = E("g2 ((1,1)(1,2))", 2);
  const Element b = E("g2 ((1,1)(2,1)) ((1,2)(1,3))", 2);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_in_hn(a, b));
}
BENCHMARK(BM_NonConjugateHn)->Unit(benchmark::kMillisecond);

void BM_ConjugateFsym(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::string w;
  for (int i = 1; i < k; ++i) w += "((1," + std::to_string(i) + ")(2," + std::to_string(i + 1) + ")) ";
  const Element a = E(w, 2);
  const Element b = conjugate(a, E("((1,1)(2,1)) ((1,3)(2,2))", 2));
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_in_fsym(a, b));
}
BENCHMARK(BM_ConjugateFsym)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithNormalForm(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::vector<IntVector> rows(d, IntVector(d));
  for (auto& r : rows)
    for (auto& v : r) v = static_cast<int>(rng() % 19) - 9;
  const IntMatrix m = IntMatrix::from_rows(rows, d);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(10);

void BM_CentralizerLattice(benchmark::State& state) {
  const Element a = E("g2 ((3,1)(4,2)) ((5,1)(5,3))", 5);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_translation_lattice(a));
}
BENCHMARK(BM_CentralizerLattice);

}  // namespace

BENCHMARK_MAIN();
