#include <benchmark/benchmark.h>

#include "s4/affine_fock.hpp"
#include "s4/lattice_invariants.hpp"
#include "s4/lie_algebra.hpp"
#include "s4/q_series.hpp"
#include "s4/virasoro.hpp"

namespace {

void BM_ChevalleyConstruction(benchmark::State& state, const char* label) {
  const auto rs = s4::build_root_system(label);
  for (auto _ : state) benchmark::DoNotOptimize(s4::build_chevalley(rs));
}
BENCHMARK_CAPTURE(BM_ChevalleyConstruction, G2, "G2");
BENCHMARK_CAPTURE(BM_ChevalleyConstruction, F4, "F4");

void BM_QuarticTrace(benchmark::State& state, const char* label) {
  const auto g = s4::build_chevalley(s4::build_root_system(label));
  std::mt19937_64 rng(s4::kDefaultSeed);
  std::vector<s4::Vector> args;
  for (int i = 0; i < 4; ++i) args.push_back(s4::random_small_vector(rng, g.dim()));
  for (auto _ : state) benchmark::DoNotOptimize(s4::trace_ad_product(g, args));
}
BENCHMARK_CAPTURE(BM_QuarticTrace, D4, "D4");
BENCHMARK_CAPTURE(BM_QuarticTrace, E6, "E6");

void BM_FixedPointSeries(benchmark::State& state, const char* label) {
  const auto type = s4::CartanType::parse(label);
  for (auto _ : state) benchmark::DoNotOptimize(s4::fixed_point_graded_dimension(type, 7));
}
BENCHMARK_CAPTURE(BM_FixedPointSeries, G2, "G2");
BENCHMARK_CAPTURE(BM_FixedPointSeries, D4, "D4");

void BM_Molien(benchmark::State& state) {
  const auto group = s4::lattice_automorphism_group(s4::Lattice::D4, s4::Subgroup::full);
  for (auto _ : state) benchmark::DoNotOptimize(s4::molien_invariant_dimensions(group, 6));
}
BENCHMARK(BM_Molien);

void BM_VirasoroGram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s4::gram_determinant_polynomial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VirasoroGram)->Arg(4)->Arg(6);

void BM_FockGram(benchmark::State& state) {
  const auto g = s4::build_chevalley(s4::build_root_system("A1"));
  for (auto _ : state) {
    s4::AffineFock fock(g);
    benchmark::DoNotOptimize(fock.gram(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_FockGram)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
