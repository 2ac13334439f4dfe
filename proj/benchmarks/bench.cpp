#include "qhecke/coxeter.hpp"
#include "qhecke/cyclotomic.hpp"
#include "qhecke/fock.hpp"
#include "qhecke/hall.hpp"
#include "qhecke/heckebridge.hpp"
#include "qhecke/klr_analysis.hpp"
#include "qhecke/klr_operator.hpp"
#include "qhecke/nilhecke.hpp"
#include "qhecke/polyring.hpp"

#include <benchmark/benchmark.h>

using namespace qh;

static void BM_Poincare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poincare_polynomial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Poincare)->DenseRange(4, 7);

static void BM_DemazureLongest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MPoly p = staircase(n);
  const Permutation w0 = longest_element(n);
  for (auto _ : state) benchmark::DoNotOptimize(demazure_word(w0, p));
}
BENCHMARK(BM_DemazureLongest)->DenseRange(3, 6);

static void BM_SchubertCoordinates(benchmark::State& state) {
  MPoly p;
  for (const auto& m : monomials_up_to(3, 5)) p += MPoly::term(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(schubert_coordinates(p, 3));
}
BENCHMARK(BM_SchubertCoordinates);

static void BM_NilHeckeProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = b_n(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_NilHeckeProduct)->DenseRange(2, 4);

static void BM_KLRRelations(benchmark::State& state) {
  for (auto _ : state) {
    KLRAlgebra A(QuiverData::preset("a3"), 3);
    benchmark::DoNotOptimize(check_relations(A, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_KLRRelations)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_PBWIndependence(benchmark::State& state) {
  for (auto _ : state) {
    KLRAlgebra A(QuiverData::preset("a2"), 3);
    benchmark::DoNotOptimize(pbw_independence(A, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PBWIndependence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CyclotomicRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_rank(n, n, 1, 1));
}
BENCHMARK(BM_CyclotomicRank)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DegenerateBridge(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_degenerate_relations(static_cast<int>(state.range(0)), 4, arithmetic_vertices(3)));
}
BENCHMARK(BM_DegenerateBridge)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_AffineBridge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_affine_relations(2, 4, geometric_vertices(3)));
}
BENCHMARK(BM_AffineBridge)->Unit(benchmark::kMillisecond);

static void BM_HallClassify(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HallAlgebra H(HallQuiver::jordan(), q);
    benchmark::DoNotOptimize(H.classes({3}).size());
  }
}
BENCHMARK(BM_HallClassify)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_HallSerre(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HallAlgebra H(HallQuiver::from(QuiverData::preset("a2")), q);
    benchmark::DoNotOptimize(H.serre_relation(1, 2));
  }
}
BENCHMARK(BM_HallSerre)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FockRelations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_fock_relations(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FockRelations)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
