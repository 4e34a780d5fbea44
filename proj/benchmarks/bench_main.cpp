#include <random>

#include <benchmark/benchmark.h>

#include "pcdyn/dynamics.hpp"
#include "pcdyn/harness.hpp"

namespace pcdyn {
namespace {

CorpusEntry entry(const std::string& name) { return load_corpus_entry(PCDYN_CORPUS_DIR, name); }

void BM_Multiply(benchmark::State& state, const char* name) {
  auto e = entry(name);
  std::mt19937_64 rng(1);
  std::vector<ExponentVector> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_element(*e.pres, rng));
  Collector m(*e.pres);
  OpCounter ctr;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.multiply(xs[i % 64], xs[(i * 7 + 3) % 64], ctr));
    ++i;
  }
}
BENCHMARK_CAPTURE(BM_Multiply, UT4_2, "UT4_2");
BENCHMARK_CAPTURE(BM_Multiply, UT8_2, "UT8_2");
BENCHMARK_CAPTURE(BM_Multiply, S4, "S4");

void BM_Normalize(benchmark::State& state, const char* name, MultiplyMode mode) {
  auto e = entry(name);
  for (auto _ : state) {
    OpCounter ctr;
    benchmark::DoNotOptimize(lg_normalize(e.pres, mode, ctr));
  }
}
BENCHMARK_CAPTURE(BM_Normalize, UT4_2_scrambled, "UT4_2_scrambled", MultiplyMode::kDirect);
BENCHMARK_CAPTURE(BM_Normalize, UT4_2_scrambled_emulate, "UT4_2_scrambled", MultiplyMode::kEmulate);
BENCHMARK_CAPTURE(BM_Normalize, UT6_2, "UT6_2", MultiplyMode::kDirect);

void BM_Order(benchmark::State& state, const char* name, const char* tag, bool generic) {
  auto e = entry(name);
  const PcAutomorphism& a = e.automorphisms.at(tag);
  std::uint64_t mults = 0;
  for (auto _ : state) {
    if (generic) {
      auto r = generic_order(a);
      mults = r.multiplications;
      benchmark::DoNotOptimize(r);
    } else {
      auto r = automorphism_order_report(a, DynamicsOptions{.certify = false});
      mults = r.multiplications;
      benchmark::DoNotOptimize(r);
    }
  }
  state.counters["mults"] = static_cast<double>(mults);
}
BENCHMARK_CAPTURE(BM_Order, C10007_algo1, "C10007", "primitive", false);
BENCHMARK_CAPTURE(BM_Order, C10007_generic, "C10007", "primitive", true);
BENCHMARK_CAPTURE(BM_Order, UT6_2_algo1, "UT6_2", "flip", false);
BENCHMARK_CAPTURE(BM_Order, UT6_2_generic, "UT6_2", "flip", true);
BENCHMARK_CAPTURE(BM_Order, UT8_2_algo1, "UT8_2", "flip", false);

void BM_CycleLength(benchmark::State& state, const char* name) {
  auto e = entry(name);
  std::mt19937_64 rng(2);
  const auto& alpha = e.automorphisms.begin()->second;
  AffineMap A{random_element(*e.pres, rng), alpha};
  ExponentVector g = random_element(*e.pres, rng);
  for (auto _ : state) benchmark::DoNotOptimize(affine_cycle_length(A, g));
}
BENCHMARK_CAPTURE(BM_CycleLength, UT6_2, "UT6_2");
BENCHMARK_CAPTURE(BM_CycleLength, S4, "S4");

}  // namespace
}  // namespace pcdyn

BENCHMARK_MAIN();
